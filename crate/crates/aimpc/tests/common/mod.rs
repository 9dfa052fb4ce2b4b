//! Seeded generators shared by the integration suites.

use rand::rngs::StdRng;
use rand::Rng;

use aimpc::aimp::{Address, Cmd, Expr, Program, Store};
use aimpc::signatures::VerbSignature;

pub const ADDRESS_POOL: [&str; 8] = [
    "pooja_apple",
    "john_apple",
    "mary_sticker",
    "tom_candy",
    "sara_coin",
    "ben_card",
    "amy_card",
    "leo_marble",
];

pub fn random_address(rng: &mut StdRng) -> Address {
    let name = ADDRESS_POOL[rng.random_range(0..ADDRESS_POOL.len())];
    Address::new(name).unwrap()
}

/// A non-negative literal that the printer renders losslessly.
pub fn random_literal(rng: &mut StdRng, max: f64) -> f64 {
    if rng.random_bool(0.5) {
        rng.random_range(0..=(max as i64)) as f64
    } else {
        // shortest-representation floats round-trip through Display
        (rng.random::<f64>() * max * 100.0).round() / 100.0
    }
}

/// A numeric expression of the given depth, literals in `[0, max]`.
pub fn random_expr(rng: &mut StdRng, depth: usize, max: f64) -> Expr {
    if depth == 0 || rng.random_bool(0.4) {
        if rng.random_bool(0.5) {
            Expr::num(random_literal(rng, max))
        } else {
            Expr::addr(random_address(rng))
        }
    } else if rng.random_bool(0.5) {
        Expr::plus(
            random_expr(rng, depth - 1, max),
            random_expr(rng, depth - 1, max),
        )
    } else {
        Expr::minus(
            random_expr(rng, depth - 1, max),
            random_expr(rng, depth - 1, max),
        )
    }
}

/// A non-sequence command.
pub fn random_atom(rng: &mut StdRng, expr_depth: usize, max: f64) -> Cmd {
    match rng.random_range(0..4) {
        0 => Cmd::Skip,
        1 => Cmd::print(random_expr(rng, expr_depth, max)),
        _ => Cmd::set(random_address(rng), random_expr(rng, expr_depth, max)),
    }
}

/// A well-typed program whose sequence spine nests to the right, the
/// canonical shape both the parser and the pipeline produce.
pub fn random_program(rng: &mut StdRng, max_atoms: usize, expr_depth: usize, max: f64) -> Program {
    let n = rng.random_range(1..=max_atoms);
    let mut cmd = random_atom(rng, expr_depth, max);
    for _ in 1..n {
        cmd = Cmd::seq(random_atom(rng, expr_depth, max), cmd);
    }
    Program::new(cmd)
}

/// A store of integer values with magnitudes up to `2^40`.
pub fn random_integer_store(rng: &mut StdRng) -> Store {
    let n = rng.random_range(0..=6);
    let mut store = Store::new();
    for _ in 0..n {
        let value = rng.random_range(-(1i64 << 40)..=(1i64 << 40)) as f64;
        store.set(random_address(rng), value);
    }
    store
}

/// A transfer signature between two distinct pool addresses with an
/// integer amount up to `2^40`.
pub fn random_transfer(rng: &mut StdRng) -> VerbSignature {
    let a = rng.random_range(0..ADDRESS_POOL.len());
    let mut b = rng.random_range(0..ADDRESS_POOL.len());
    while b == a {
        b = rng.random_range(0..ADDRESS_POOL.len());
    }
    let subject = Address::new(ADDRESS_POOL[a]).unwrap();
    let indirect = Address::new(ADDRESS_POOL[b]).unwrap();
    let amount = Expr::num(rng.random_range(0..=(1i64 << 40)) as f64);
    if rng.random_bool(0.5) {
        VerbSignature::PositiveTransfer { subject, indirect, amount }
    } else {
        VerbSignature::NegativeTransfer { subject, indirect, amount }
    }
}

/// Sum of all bound values, exact for integer stores in range.
pub fn store_total(store: &Store) -> f64 {
    store.bindings().map(|(_, v)| v).sum()
}
