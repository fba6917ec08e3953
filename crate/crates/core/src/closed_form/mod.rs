//! Closed-form products for the catalog algebras.
//!
//! [`product`] evaluates the explicit multi-sum for one algebra. The
//! straightening identities it is built from live in [`lemmas`], and
//! [`product_checked`] recomputes every product by chaining those identities
//! through [`compose`] as an independent cross-check.

pub mod combinatorics;
pub mod compose;
mod int;
pub mod lemmas;
pub mod roles;
mod theorems;

use std::fmt;
use std::str::FromStr;

pub use compose::{compose_product, lemma_for};
pub use lemmas::{
    cpr_terms, divided_power_coeff, lemma_acd_terms, lemma_bcd_acg_terms, lemma_chain_bc_terms,
    lemma_chain_terms, DividedTerm, Lemma, Role, RoleExponents, StraighteningTerm,
};
pub use roles::{apply_roles, infer_binding, RoleBinding, Slot};

use crate::error::{Error, Result};
use crate::lie::{builtin, LieAlgebra};
use crate::poly::{Monomial, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraId {
    N3_1,
    N4_1,
    N5_1,
    N5_2,
    N5_3,
    N5_4,
    N5_5,
    N5_6,
}

impl AlgebraId {
    pub const ALL: [AlgebraId; 8] = [
        AlgebraId::N3_1,
        AlgebraId::N4_1,
        AlgebraId::N5_1,
        AlgebraId::N5_2,
        AlgebraId::N5_3,
        AlgebraId::N5_4,
        AlgebraId::N5_5,
        AlgebraId::N5_6,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgebraId::N3_1 => "n3_1",
            AlgebraId::N4_1 => "n4_1",
            AlgebraId::N5_1 => "n5_1",
            AlgebraId::N5_2 => "n5_2",
            AlgebraId::N5_3 => "n5_3",
            AlgebraId::N5_4 => "n5_4",
            AlgebraId::N5_5 => "n5_5",
            AlgebraId::N5_6 => "n5_6",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            AlgebraId::N3_1 => 3,
            AlgebraId::N4_1 => 4,
            _ => 5,
        }
    }

    pub fn algebra(self) -> LieAlgebra {
        builtin(self.name()).expect("catalog algebra")
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        AlgebraId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Unsupported(s.to_string()))
    }
}

/// PBW expansion of `left * right` from the explicit formula for `id`.
pub fn product(id: AlgebraId, left: &Monomial, right: &Monomial) -> Result<Polynomial> {
    for m in [left, right] {
        if m.dim() != id.dim() {
            return Err(Error::DimensionMismatch {
                expected: id.dim(),
                found: m.dim(),
            });
        }
    }
    let f = match id {
        AlgebraId::N3_1 => theorems::n3_1,
        AlgebraId::N4_1 => theorems::n4_1,
        AlgebraId::N5_1 => theorems::n5_1,
        AlgebraId::N5_2 => theorems::n5_2,
        AlgebraId::N5_3 => theorems::n5_3,
        AlgebraId::N5_4 => theorems::n5_4,
        AlgebraId::N5_5 => theorems::n5_5,
        AlgebraId::N5_6 => theorems::n5_6,
    };
    Ok(f(left, right))
}

/// [`product`], verified against the lemma-composition path.
pub fn product_checked(id: AlgebraId, left: &Monomial, right: &Monomial) -> Result<Polynomial> {
    let closed = product(id, left, right)?;
    let composed = compose_product(&id.algebra(), left, right)?;
    if closed != composed {
        return Err(Error::Divergence {
            left: left.clone(),
            right: right.clone(),
            closed,
            oracle: composed,
        });
    }
    Ok(closed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::oracle_product;
    use crate::poly::rational;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn poly(dim: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        let mut p = Polynomial::zero(dim);
        for (c, e) in terms {
            p.add_term(mono(e), rational(*c));
        }
        p
    }

    #[test]
    fn ids_round_trip() {
        for id in AlgebraId::ALL {
            assert_eq!(id.name().parse::<AlgebraId>().unwrap(), id);
            assert_eq!(id.algebra().dim(), id.dim());
        }
        assert!("abelian_3".parse::<AlgebraId>().is_err());
    }

    #[test]
    fn heisenberg_spot_values() {
        let got = product(AlgebraId::N3_1, &mono(&[0, 0, 1]), &mono(&[0, 1, 0])).unwrap();
        assert_eq!(got, poly(3, &[(1, &[0, 1, 1]), (-1, &[1, 0, 0])]));
        let got = product(AlgebraId::N3_1, &mono(&[0, 0, 2]), &mono(&[0, 2, 0])).unwrap();
        assert_eq!(
            got,
            poly(3, &[(1, &[0, 2, 2]), (-4, &[1, 1, 1]), (2, &[2, 0, 0])])
        );
    }

    #[test]
    fn n56_spot_value() {
        let got = product(AlgebraId::N5_6, &mono(&[0, 0, 0, 0, 2]), &mono(&[0, 0, 0, 1, 0])).unwrap();
        assert_eq!(got.to_string(), "x4*x5^2 - 2*x3*x5 + x2");
    }

    #[test]
    fn unit_on_either_side() {
        for id in AlgebraId::ALL {
            let one = Monomial::one(id.dim());
            for m in Monomial::enumerate(id.dim(), 2) {
                let pm = Polynomial::from_monomial(m.clone());
                assert_eq!(product(id, &one, &m).unwrap(), pm);
                assert_eq!(product(id, &m, &one).unwrap(), pm);
            }
        }
    }

    #[test]
    fn dimension_checked() {
        let err = product(AlgebraId::N4_1, &Monomial::one(4), &Monomial::one(5)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 4, found: 5 }));
    }

    #[test]
    fn agrees_with_oracle_degree_two() {
        for id in AlgebraId::ALL {
            let alg = id.algebra();
            let monos = Monomial::enumerate(id.dim(), 2);
            for l in &monos {
                for r in &monos {
                    assert_eq!(
                        product(id, l, r).unwrap(),
                        oracle_product(&alg, l, r).unwrap(),
                        "{id} {l} * {r}"
                    );
                }
            }
        }
    }

    #[test]
    fn checked_path_agrees() {
        for id in AlgebraId::ALL {
            let monos = Monomial::enumerate(id.dim(), 2);
            for l in &monos {
                for r in &monos {
                    product_checked(id, l, r).unwrap();
                }
            }
        }
    }
}
