//! Binding abstract lemma roles to signed generators of a concrete algebra.

use num_traits::{One, Zero};

use super::lemmas::{Lemma, Role, StraighteningTerm};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::poly::{Monomial, Polynomial, Rational};

/// Role `r` stands for `sign * x_index`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Slot {
    pub index: usize,
    pub sign: i64,
}

#[derive(Clone, Debug)]
pub struct RoleBinding<'a> {
    alg: &'a LieAlgebra,
    lemma: Lemma,
    slots: [Option<Slot>; 5],
}

impl<'a> RoleBinding<'a> {
    /// Records the binding without checking it; see [`RoleBinding::check`].
    pub fn new(alg: &'a LieAlgebra, lemma: Lemma, binds: &[(Role, usize, i64)]) -> Self {
        let mut slots = [None; 5];
        for &(role, index, sign) in binds {
            slots[role as usize] = Some(Slot { index, sign });
        }
        RoleBinding { alg, lemma, slots }
    }

    pub fn lemma(&self) -> Lemma {
        self.lemma
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.alg
    }

    pub fn slot(&self, role: Role) -> Option<Slot> {
        self.slots[role as usize]
    }

    fn form(&self, role: Role) -> Vec<(usize, Rational)> {
        match self.slot(role) {
            Some(s) => vec![(s.index, Rational::from_integer(s.sign.into()))],
            None => Vec::new(),
        }
    }

    /// Checks that every role of the lemma is bound to a distinct generator
    /// in strictly decreasing index order, and that the signed generators
    /// satisfy the lemma's brackets with every other bracket zero.
    pub fn check(&self) -> Result<()> {
        let roles = self.lemma.roles();
        for (pos, &role) in Role::ALL.iter().enumerate() {
            let bound = self.slots[pos];
            match (roles.contains(&role), bound) {
                (true, None) => {
                    return Err(Error::BadBinding(format!("role {role} is unbound")));
                }
                (false, Some(_)) => {
                    return Err(Error::BadBinding(format!(
                        "role {role} is not used by this lemma"
                    )));
                }
                (true, Some(s)) => {
                    self.alg.check_index(s.index)?;
                    if s.sign != 1 && s.sign != -1 {
                        return Err(Error::BadBinding(format!(
                            "role {role} has sign {}, expected 1 or -1",
                            s.sign
                        )));
                    }
                }
                (false, None) => {}
            }
        }
        for w in roles.windows(2) {
            let (p, q) = (self.slot(w[0]).unwrap(), self.slot(w[1]).unwrap());
            if p.index <= q.index {
                return Err(Error::RoleOrder(format!(
                    "{}=x{} must exceed {}=x{}",
                    w[0], p.index, w[1], q.index
                )));
            }
        }

        let dim = self.alg.dim();
        for (n, &p) in roles.iter().enumerate() {
            for &q in &roles[n + 1..] {
                let found = self.alg.bracket_forms(&self.form(p), &self.form(q));
                let expected = self
                    .lemma
                    .relations()
                    .iter()
                    .find(|(l, r, _, _)| *l == p && *r == q)
                    .map(|&(_, _, target, sign)| {
                        let s = self.slot(target).unwrap();
                        vec![(s.index, Rational::from_integer((sign * s.sign).into()))]
                    })
                    .unwrap_or_default();
                if found != expected {
                    return Err(Error::HypothesisMismatch {
                        left: p.to_string(),
                        right: q.to_string(),
                        found: Polynomial::linear(dim, found).to_string(),
                        expected: Polynomial::linear(dim, expected).to_string(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// Instantiates lemma terms in the bound algebra. Each role exponent moves to
/// its generator slot and the coefficient picks up `sign^exponent` per role
/// and `(-1)^neg_g`.
pub fn apply_roles(binding: &RoleBinding<'_>, terms: &[StraighteningTerm]) -> Result<Polynomial> {
    binding.check()?;
    let dim = binding.alg.dim();
    let mut out = Polynomial::zero(dim);
    for term in terms {
        if term.coeff.is_zero() {
            continue;
        }
        let mut exps = vec![0u32; dim];
        let mut flips = term.neg_g;
        for role in Role::ALL {
            let e = term.role_exponents[role];
            if e == 0 {
                continue;
            }
            let slot = binding.slot(role).ok_or_else(|| {
                Error::BadBinding(format!("term uses unbound role {role}"))
            })?;
            exps[slot.index - 1] += e;
            if slot.sign < 0 {
                flips += e;
            }
        }
        let c = if flips % 2 == 1 {
            -&term.coeff
        } else {
            term.coeff.clone()
        };
        out.add_term(Monomial::new(exps), c);
    }
    Ok(out)
}

/// Finds the lemma and signed roles for straightening `x_a^t x_b^u`, `a > b`,
/// when `[x_a, x_b] != 0`. Roles `c, d, g` are read off the brackets; the
/// first lemma whose full hypothesis check passes wins.
pub fn infer_binding(alg: &LieAlgebra, a: usize, b: usize) -> Option<RoleBinding<'_>> {
    let single = |form: Vec<(usize, Rational)>| -> Option<(usize, i64)> {
        match form.as_slice() {
            [(k, c)] if c.is_one() => Some((*k, 1)),
            [(k, c)] if *c == -Rational::one() => Some((*k, -1)),
            _ => None,
        }
    };
    let signed = |(k, s): (usize, i64)| vec![(k, Rational::from_integer(s.into()))];
    let xa = signed((a, 1));
    let xb = signed((b, 1));

    let c = single(alg.bracket_forms(&xa, &xb))?;
    let ac = single(alg.bracket_forms(&xa, &signed(c)));
    let bc = single(alg.bracket_forms(&xb, &signed(c)));
    let ad = ac.and_then(|d| single(alg.bracket_forms(&xa, &signed(d))));

    let base = [(Role::A, a, 1), (Role::B, b, 1), (Role::C, c.0, c.1)];
    let mut candidates: Vec<(Lemma, Vec<(Role, usize, i64)>)> = vec![(Lemma::Cpr, base.to_vec())];
    if let Some(d) = ac {
        let mut v = base.to_vec();
        v.push((Role::D, d.0, d.1));
        candidates.push((Lemma::Acd, v.clone()));
        if let Some(g) = ad {
            v.push((Role::G, g.0, g.1));
            candidates.push((Lemma::Chain, v.clone()));
            candidates.push((Lemma::ChainBc, v));
        }
    }
    if let (Some(d), Some(g)) = (bc, ac) {
        let mut v = base.to_vec();
        v.push((Role::D, d.0, d.1));
        v.push((Role::G, g.0, g.1));
        candidates.push((Lemma::BcdAcg, v));
    }
    candidates.into_iter().find_map(|(lemma, binds)| {
        let binding = RoleBinding::new(alg, lemma, &binds);
        binding.check().is_ok().then_some(binding)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closed_form::lemmas::{cpr_terms, lemma_acd_terms};
    use crate::lie::{builtin, BracketTable, LieAlgebraSpec};
    use crate::oracle::oracle_product;
    use crate::poly::rational;

    fn poly(dim: usize, terms: &[(i64, &[u32])]) -> Polynomial {
        let mut p = Polynomial::zero(dim);
        for (c, e) in terms {
            p.add_term(Monomial::new(e.to_vec()), rational(*c));
        }
        p
    }

    fn power(dim: usize, index: usize, e: u32) -> Monomial {
        let mut v = vec![0; dim];
        v[index - 1] = e;
        Monomial::new(v)
    }

    fn catalog_binding(alg: &LieAlgebra, lemma: Lemma) -> RoleBinding<'_> {
        use Role::*;
        let binds: &[(Role, usize, i64)] = match lemma {
            Lemma::Cpr => &[(A, 3, 1), (B, 2, 1), (C, 1, -1)],
            Lemma::Acd => &[(A, 4, 1), (B, 3, 1), (C, 2, -1), (D, 1, 1)],
            Lemma::BcdAcg => &[(A, 5, 1), (B, 4, 1), (C, 3, -1), (D, 2, 1), (G, 1, 1)],
            Lemma::Chain | Lemma::ChainBc => {
                &[(A, 5, 1), (B, 4, 1), (C, 3, -1), (D, 2, 1), (G, 1, -1)]
            }
        };
        RoleBinding::new(alg, lemma, binds)
    }

    fn host(lemma: Lemma) -> &'static str {
        match lemma {
            Lemma::Cpr => "n3_1",
            Lemma::Acd => "n4_1",
            Lemma::BcdAcg => "n5_2",
            Lemma::Chain => "n5_5",
            Lemma::ChainBc => "n5_6",
        }
    }

    #[test]
    fn cpr_in_heisenberg() {
        let n31 = builtin("n3_1").unwrap();
        let b = catalog_binding(&n31, Lemma::Cpr);
        let got = apply_roles(&b, &cpr_terms(1, 1)).unwrap();
        assert_eq!(got, poly(3, &[(1, &[0, 1, 1]), (-1, &[1, 0, 0])]));
    }

    #[test]
    fn acd_in_n41() {
        let n41 = builtin("n4_1").unwrap();
        let b = catalog_binding(&n41, Lemma::Acd);
        let got = apply_roles(&b, &lemma_acd_terms(1, 1)).unwrap();
        assert_eq!(got, poly(4, &[(1, &[0, 0, 1, 1]), (-1, &[0, 1, 0, 0])]));
    }

    #[test]
    fn every_lemma_matches_oracle() {
        for lemma in Lemma::ALL {
            let alg = builtin(host(lemma)).unwrap();
            let b = catalog_binding(&alg, lemma);
            let (ia, ib) = (b.slot(Role::A).unwrap().index, b.slot(Role::B).unwrap().index);
            for t in 0..=4 {
                for u in 0..=4 {
                    let got = apply_roles(&b, &lemma.terms(t, u)).unwrap();
                    let want = oracle_product(
                        &alg,
                        &power(alg.dim(), ia, t),
                        &power(alg.dim(), ib, u),
                    )
                    .unwrap();
                    assert_eq!(got, want, "{lemma:?} t={t} u={u}");
                }
            }
        }
    }

    #[test]
    fn wrong_target_is_rejected() {
        let n31 = builtin("n3_1").unwrap();
        let b = RoleBinding::new(&n31, Lemma::Cpr, &[(Role::A, 3, 1), (Role::B, 2, 1), (Role::C, 1, 1)]);
        let err = apply_roles(&b, &cpr_terms(1, 1)).unwrap_err();
        match err {
            Error::HypothesisMismatch { left, right, .. } => {
                assert_eq!((left.as_str(), right.as_str()), ("a", "b"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn increasing_order_is_rejected() {
        let n31 = builtin("n3_1").unwrap();
        let b = RoleBinding::new(&n31, Lemma::Cpr, &[(Role::A, 2, 1), (Role::B, 3, 1), (Role::C, 1, 1)]);
        assert!(matches!(b.check(), Err(Error::RoleOrder(_))));
    }

    #[test]
    fn unbound_and_extra_roles() {
        let n41 = builtin("n4_1").unwrap();
        let missing = RoleBinding::new(&n41, Lemma::Acd, &[(Role::A, 4, 1), (Role::B, 3, 1), (Role::C, 2, -1)]);
        assert!(matches!(missing.check(), Err(Error::BadBinding(_))));
        let extra = RoleBinding::new(
            &n41,
            Lemma::Cpr,
            &[(Role::A, 4, 1), (Role::B, 3, 1), (Role::C, 2, -1), (Role::D, 1, 1)],
        );
        assert!(matches!(extra.check(), Err(Error::BadBinding(_))));
    }

    /// Flips or removes one bracket of the host algebra; every mutant that is
    /// still a Lie algebra must fail the hypothesis check.
    #[test]
    fn mutated_brackets_are_rejected() {
        for lemma in Lemma::ALL {
            let alg = builtin(host(lemma)).unwrap();
            assert!(catalog_binding(&alg, lemma).check().is_ok(), "{lemma:?}");
            let spec = alg.spec().clone();
            let mut mutants = Vec::new();
            for n in 0..spec.brackets.entries.len() {
                let mut flipped = spec.clone();
                let e = &mut flipped.brackets.entries[n];
                e.value = e.value.iter().map(|(g, c)| (*g, -c)).collect();
                mutants.push(flipped);
                let mut removed = spec.clone();
                removed.brackets.entries.remove(n);
                mutants.push(removed);
            }
            let mut tested = 0;
            for m in mutants {
                let Ok(malg) = LieAlgebra::new(m) else { continue };
                assert!(catalog_binding(&malg, lemma).check().is_err(), "{lemma:?}");
                tested += 1;
            }
            assert!(tested > 0);
        }
    }

    #[test]
    fn mutation_on_custom_algebra() {
        // n4_1 with [x3,x2] added: still a Lie algebra, but breaks the
        // requirement [b,c] = 0 for the Acd binding.
        let t = BracketTable::new()
            .with(4, 2, vec![(1, rational(-1))])
            .with(4, 3, vec![(2, rational(-1))])
            .with(3, 2, vec![(1, rational(1))]);
        let alg = LieAlgebra::new(LieAlgebraSpec::new("n4_1+", 4, t)).unwrap();
        let b = catalog_binding(&alg, Lemma::Acd);
        match b.check() {
            Err(Error::HypothesisMismatch { left, right, .. }) => {
                assert_eq!((left.as_str(), right.as_str()), ("b", "c"));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn inference_on_catalog() {
        let cases = [
            ("n3_1", 3, 2, Lemma::Cpr),
            ("n4_1", 4, 3, Lemma::Acd),
            ("n5_2", 5, 4, Lemma::BcdAcg),
            ("n5_4", 5, 4, Lemma::Acd),
            ("n5_5", 5, 4, Lemma::Chain),
            ("n5_5", 5, 3, Lemma::Acd),
            ("n5_6", 5, 4, Lemma::ChainBc),
            ("n5_6", 4, 3, Lemma::Cpr),
        ];
        for (name, a, b, lemma) in cases {
            let alg = builtin(name).unwrap();
            let got = infer_binding(&alg, a, b).unwrap();
            assert_eq!(got.lemma(), lemma, "{name} ({a},{b})");
        }
    }
}
