//! The six verb signatures and their deterministic lowering to A-IMP.
//!
//! A signature is the semantic middle ground between a sentence fragment
//! and code: `observation` introduces a variable, `construct`/`destroy`
//! add to or subtract from one, the transfers move a quantity between two
//! variables, and `get` prints one.

use std::fmt;

use serde::Serialize;

use crate::aimp::{print_expr, Address, Cmd, Expr};

/// For transfers, `subject` is the variable derived from the sentence's
/// subject and `indirect` the one derived from the indirect-object-like
/// dependent; a positive transfer means the subject gains.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "signature", rename_all = "snake_case")]
pub enum VerbSignature {
    Observation { addr: Address, amount: Expr },
    Construct { addr: Address, amount: Expr },
    Destroy { addr: Address, amount: Expr },
    PositiveTransfer { subject: Address, indirect: Address, amount: Expr },
    NegativeTransfer { subject: Address, indirect: Address, amount: Expr },
    Get { addr: Address },
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum InvalidSignature {
    #[error("transfer between {0} and itself")]
    SelfTransfer(Address),
}

impl fmt::Display for VerbSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerbSignature::Observation { addr, amount } => {
                write!(f, "observation({addr}, {})", print_expr(amount))
            }
            VerbSignature::Construct { addr, amount } => {
                write!(f, "construct({addr}, {})", print_expr(amount))
            }
            VerbSignature::Destroy { addr, amount } => {
                write!(f, "destroy({addr}, {})", print_expr(amount))
            }
            VerbSignature::PositiveTransfer { subject, indirect, amount } => {
                write!(f, "positive_transfer({subject}, {indirect}, {})", print_expr(amount))
            }
            VerbSignature::NegativeTransfer { subject, indirect, amount } => {
                write!(f, "negative_transfer({subject}, {indirect}, {})", print_expr(amount))
            }
            VerbSignature::Get { addr } => write!(f, "get({addr})"),
        }
    }
}

fn construct(addr: &Address, amount: &Expr) -> Cmd {
    Cmd::set(
        addr.clone(),
        Expr::plus(Expr::addr(addr.clone()), amount.clone()),
    )
}

fn destroy(addr: &Address, amount: &Expr) -> Cmd {
    Cmd::set(
        addr.clone(),
        Expr::minus(Expr::addr(addr.clone()), amount.clone()),
    )
}

/// Lowers a signature to its defining command:
///
/// ```text
/// observation(a, e)           a := e
/// construct(a, e)             a := a + e
/// destroy(a, e)               a := a - e
/// positive_transfer(a1,a2,e)  construct(a1, e) ; destroy(a2, e)
/// negative_transfer(a1,a2,e)  destroy(a1, e) ; construct(a2, e)
/// get(a)                      print a
/// ```
pub fn lower(sig: &VerbSignature) -> Result<Cmd, InvalidSignature> {
    match sig {
        VerbSignature::Observation { addr, amount } => Ok(Cmd::set(addr.clone(), amount.clone())),
        VerbSignature::Construct { addr, amount } => Ok(construct(addr, amount)),
        VerbSignature::Destroy { addr, amount } => Ok(destroy(addr, amount)),
        VerbSignature::PositiveTransfer { subject, indirect, amount } => {
            if subject == indirect {
                return Err(InvalidSignature::SelfTransfer(subject.clone()));
            }
            Ok(Cmd::seq(construct(subject, amount), destroy(indirect, amount)))
        }
        VerbSignature::NegativeTransfer { subject, indirect, amount } => {
            if subject == indirect {
                return Err(InvalidSignature::SelfTransfer(subject.clone()));
            }
            Ok(Cmd::seq(destroy(subject, amount), construct(indirect, amount)))
        }
        VerbSignature::Get { addr } => Ok(Cmd::print(Expr::addr(addr.clone()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aimp::{exec_cmd, typecheck_cmd, Store};

    fn addr(s: &str) -> Address {
        Address::new(s).unwrap()
    }

    #[test]
    fn observation_lowers_to_assignment() {
        let sig = VerbSignature::Observation { addr: addr("a_p"), amount: Expr::num(3.0) };
        assert_eq!(lower(&sig).unwrap(), Cmd::set(addr("a_p"), Expr::num(3.0)));
    }

    #[test]
    fn construct_lowers_to_increment() {
        let sig = VerbSignature::Construct { addr: addr("a"), amount: Expr::num(2.0) };
        let want = Cmd::set(addr("a"), Expr::plus(Expr::addr(addr("a")), Expr::num(2.0)));
        assert_eq!(lower(&sig).unwrap(), want);
    }

    #[test]
    fn destroy_lowers_to_decrement() {
        let sig = VerbSignature::Destroy { addr: addr("a_p"), amount: Expr::num(1.0) };
        let want = Cmd::set(addr("a_p"), Expr::minus(Expr::addr(addr("a_p")), Expr::num(1.0)));
        assert_eq!(lower(&sig).unwrap(), want);
    }

    #[test]
    fn positive_transfer_is_construct_then_destroy() {
        let sig = VerbSignature::PositiveTransfer {
            subject: addr("x"),
            indirect: addr("y"),
            amount: Expr::num(2.0),
        };
        let want = Cmd::seq(
            Cmd::set(addr("x"), Expr::plus(Expr::addr(addr("x")), Expr::num(2.0))),
            Cmd::set(addr("y"), Expr::minus(Expr::addr(addr("y")), Expr::num(2.0))),
        );
        assert_eq!(lower(&sig).unwrap(), want);
    }

    #[test]
    fn negative_transfer_is_destroy_then_construct() {
        let sig = VerbSignature::NegativeTransfer {
            subject: addr("x"),
            indirect: addr("y"),
            amount: Expr::num(2.0),
        };
        let want = Cmd::seq(
            Cmd::set(addr("x"), Expr::minus(Expr::addr(addr("x")), Expr::num(2.0))),
            Cmd::set(addr("y"), Expr::plus(Expr::addr(addr("y")), Expr::num(2.0))),
        );
        assert_eq!(lower(&sig).unwrap(), want);
    }

    #[test]
    fn get_lowers_to_print() {
        let sig = VerbSignature::Get { addr: addr("a_p") };
        assert_eq!(lower(&sig).unwrap(), Cmd::print(Expr::addr(addr("a_p"))));
    }

    #[test]
    fn self_transfer_is_rejected() {
        let sig = VerbSignature::PositiveTransfer {
            subject: addr("x"),
            indirect: addr("x"),
            amount: Expr::num(1.0),
        };
        assert_eq!(lower(&sig).unwrap_err(), InvalidSignature::SelfTransfer(addr("x")));
    }

    #[test]
    fn lowered_signatures_typecheck() {
        let sigs = vec![
            VerbSignature::Observation { addr: addr("a"), amount: Expr::num(1.0) },
            VerbSignature::Construct { addr: addr("a"), amount: Expr::num(1.0) },
            VerbSignature::Destroy { addr: addr("a"), amount: Expr::num(1.0) },
            VerbSignature::PositiveTransfer {
                subject: addr("a"),
                indirect: addr("b"),
                amount: Expr::num(1.0),
            },
            VerbSignature::NegativeTransfer {
                subject: addr("a"),
                indirect: addr("b"),
                amount: Expr::num(1.0),
            },
            VerbSignature::Get { addr: addr("a") },
        ];
        for sig in sigs {
            assert_eq!(typecheck_cmd(&lower(&sig).unwrap()), Ok(()), "{sig}");
        }
    }

    #[test]
    fn construct_then_destroy_restores_the_binding() {
        let a = addr("a");
        let store: Store = [(a.clone(), 5.0)].into_iter().collect();
        let up = lower(&VerbSignature::Construct { addr: a.clone(), amount: Expr::num(7.0) }).unwrap();
        let down = lower(&VerbSignature::Destroy { addr: a.clone(), amount: Expr::num(7.0) }).unwrap();
        let out = exec_cmd(store, &Cmd::seq(up, down)).unwrap();
        assert_eq!(out.store.get(&a), Some(5.0));
    }
}
