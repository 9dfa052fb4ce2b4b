//! Property suites for the language and signature invariants.

use proptest::prelude::*;

use aimpc::aimp::{
    exec_cmd, parse_program, print_program, typecheck_cmd, Address, Cmd, Expr, Program, Store,
};
use aimpc::nlp::tokenize;
use aimpc::signatures::{lower, VerbSignature};

const NAMES: [&str; 6] = ["a_p", "pooja_apple", "john_apple", "x", "y2", "total_sum"];

fn arb_address() -> impl Strategy<Value = Address> {
    proptest::sample::select(&NAMES[..]).prop_map(|s| Address::new(s).unwrap())
}

fn arb_literal() -> impl Strategy<Value = f64> {
    (0u32..1_000_000).prop_map(|n| n as f64)
}

fn arb_expr() -> impl Strategy<Value = Expr> {
    let leaf = prop_oneof![
        arb_literal().prop_map(Expr::num),
        arb_address().prop_map(Expr::addr),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| Expr::plus(l, r)),
            (inner.clone(), inner).prop_map(|(l, r)| Expr::minus(l, r)),
        ]
    })
}

fn arb_atom() -> impl Strategy<Value = Cmd> {
    prop_oneof![
        1 => Just(Cmd::Skip),
        2 => arb_expr().prop_map(Cmd::print),
        4 => (arb_address(), arb_expr()).prop_map(|(a, e)| Cmd::set(a, e)),
    ]
}

fn arb_cmd() -> impl Strategy<Value = Cmd> {
    // right-nested spine, the canonical sequence shape
    proptest::collection::vec(arb_atom(), 1..6).prop_map(|atoms| {
        let mut iter = atoms.into_iter().rev();
        let last = iter.next().unwrap();
        iter.fold(last, |acc, c| Cmd::seq(c, acc))
    })
}

fn arb_store() -> impl Strategy<Value = Store> {
    proptest::collection::btree_map(arb_address(), 0u32..1_000_000u32, 0..5).prop_map(|m| {
        m.into_iter().map(|(a, v)| (a, v as f64)).collect()
    })
}

fn arb_transfer() -> impl Strategy<Value = VerbSignature> {
    (arb_address(), arb_address(), arb_literal(), any::<bool>()).prop_filter_map(
        "distinct parties",
        |(a, b, amount, positive)| {
            if a == b {
                return None;
            }
            let amount = Expr::num(amount);
            Some(if positive {
                VerbSignature::PositiveTransfer { subject: a, indirect: b, amount }
            } else {
                VerbSignature::NegativeTransfer { subject: a, indirect: b, amount }
            })
        },
    )
}

proptest! {
    #[test]
    fn roundtrip_parse_print(program in arb_cmd().prop_map(Program::new)) {
        let text = print_program(&program);
        let back = parse_program(&text).expect("printed programs parse");
        prop_assert_eq!(back, program);
    }

    #[test]
    fn well_typed_programs_execute(cmd in arb_cmd()) {
        prop_assert!(typecheck_cmd(&cmd).is_ok());
        prop_assert!(exec_cmd(Store::new(), &cmd).is_ok());
    }

    #[test]
    fn seq_associativity_of_effect(
        a in arb_atom(),
        b in arb_atom(),
        c in arb_atom(),
        store in arb_store(),
    ) {
        let left = Cmd::seq(Cmd::seq(a.clone(), b.clone()), c.clone());
        let right = Cmd::seq(a, Cmd::seq(b, c));
        let l = exec_cmd(store.clone(), &left).unwrap();
        let r = exec_cmd(store, &right).unwrap();
        prop_assert_eq!(l.store, r.store);
        prop_assert_eq!(l.outputs, r.outputs);
    }

    #[test]
    fn skip_is_an_identity(cmd in arb_cmd(), store in arb_store()) {
        let plain = exec_cmd(store.clone(), &cmd).unwrap();
        let before = exec_cmd(store.clone(), &Cmd::seq(Cmd::Skip, cmd.clone())).unwrap();
        let after = exec_cmd(store, &Cmd::seq(cmd, Cmd::Skip)).unwrap();
        prop_assert_eq!(&plain.store, &before.store);
        prop_assert_eq!(&plain.outputs, &before.outputs);
        prop_assert_eq!(&plain.store, &after.store);
        prop_assert_eq!(&plain.outputs, &after.outputs);
    }

    #[test]
    fn execution_is_deterministic(cmd in arb_cmd(), store in arb_store()) {
        let a = exec_cmd(store.clone(), &cmd).unwrap();
        let b = exec_cmd(store, &cmd).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn lowered_signatures_always_typecheck(transfer in arb_transfer()) {
        let cmd = lower(&transfer).expect("distinct parties lower");
        prop_assert!(typecheck_cmd(&cmd).is_ok());
    }

    #[test]
    fn opposite_transfers_mirror(
        a in arb_address(),
        b in arb_address(),
        amount in arb_literal(),
        store in arb_store(),
    ) {
        prop_assume!(a != b);
        let positive = VerbSignature::PositiveTransfer {
            subject: a.clone(),
            indirect: b.clone(),
            amount: Expr::num(amount),
        };
        let negative = VerbSignature::NegativeTransfer {
            subject: b,
            indirect: a,
            amount: Expr::num(amount),
        };
        let p = exec_cmd(store.clone(), &lower(&positive).unwrap()).unwrap();
        let n = exec_cmd(store, &lower(&negative).unwrap()).unwrap();
        prop_assert_eq!(p.store, n.store);
    }

    #[test]
    fn construct_then_destroy_is_an_inverse(
        a in arb_address(),
        initial in arb_literal(),
        amount in arb_literal(),
    ) {
        let store: Store = [(a.clone(), initial)].into_iter().collect();
        let up = lower(&VerbSignature::Construct { addr: a.clone(), amount: Expr::num(amount) })
            .unwrap();
        let down = lower(&VerbSignature::Destroy { addr: a.clone(), amount: Expr::num(amount) })
            .unwrap();
        let out = exec_cmd(store, &Cmd::seq(up, down)).unwrap();
        prop_assert_eq!(out.store.get(&a), Some(initial));
    }

    #[test]
    fn tokenize_is_idempotent_on_rejoined_output(
        words in proptest::collection::vec("[A-Za-z0-9']{1,8}[.,?!]?", 0..8)
    ) {
        let text = words.join(" ");
        let once = tokenize(&text);
        let twice = tokenize(&once.join(" "));
        prop_assert_eq!(once, twice);
    }
}
