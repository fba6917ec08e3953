//! A second, deliberately simple straightener: plain recursion on words with
//! its own copy of the bracket tables. Shares no code with the library's
//! rewriting engine or closed forms.

use std::collections::BTreeMap;

use uea::{oracle_product, product, AlgebraId, Monomial};

/// `[x_i, x_j] = -x_g` for each `(i, j, g)`.
fn table(id: AlgebraId) -> &'static [(usize, usize, usize)] {
    match id {
        AlgebraId::N3_1 => &[(3, 2, 1)],
        AlgebraId::N4_1 => &[(4, 2, 1), (4, 3, 2)],
        AlgebraId::N5_1 => &[(5, 3, 1), (5, 4, 2)],
        AlgebraId::N5_2 => &[(4, 3, 2), (5, 3, 1), (5, 4, 3)],
        AlgebraId::N5_3 => &[(4, 2, 1), (5, 3, 1)],
        AlgebraId::N5_4 => &[(4, 3, 1), (5, 2, 1), (5, 4, 2)],
        AlgebraId::N5_5 => &[(5, 2, 1), (5, 3, 2), (5, 4, 3)],
        AlgebraId::N5_6 => &[(4, 3, 1), (5, 2, 1), (5, 3, 2), (5, 4, 3)],
    }
}

type Naive = BTreeMap<Vec<u32>, i64>;

fn normal(id: AlgebraId, word: &[usize], coeff: i64, out: &mut Naive) {
    if let Some(p) = (0..word.len().saturating_sub(1)).find(|&p| word[p] > word[p + 1]) {
        let (i, j) = (word[p], word[p + 1]);
        let mut swapped = word.to_vec();
        swapped.swap(p, p + 1);
        normal(id, &swapped, coeff, out);
        if let Some(&(_, _, g)) = table(id).iter().find(|&&(a, b, _)| a == i && b == j) {
            let mut shorter = word[..p].to_vec();
            shorter.push(g);
            shorter.extend_from_slice(&word[p + 2..]);
            normal(id, &shorter, -coeff, out);
        }
        return;
    }
    let mut exps = vec![0u32; id.dim()];
    for &g in word {
        exps[g - 1] += 1;
    }
    *out.entry(exps).or_default() += coeff;
}

fn naive_product(id: AlgebraId, l: &Monomial, r: &Monomial) -> Naive {
    let word: Vec<usize> = l.letters().chain(r.letters()).collect();
    let mut out = Naive::new();
    normal(id, &word, 1, &mut out);
    out.retain(|_, c| *c != 0);
    out
}

fn as_naive(p: &uea::Polynomial) -> Naive {
    p.terms()
        .map(|(m, c)| {
            assert!(c.is_integer());
            (m.exps().to_vec(), c.to_integer().try_into().unwrap())
        })
        .collect()
}

#[test]
fn naive_agrees_with_both_engines() {
    for id in AlgebraId::ALL {
        let alg = id.algebra();
        let degree = if id.dim() == 5 { 2 } else { 3 };
        let monos = Monomial::enumerate(id.dim(), degree);
        for l in &monos {
            for r in &monos {
                let want = naive_product(id, l, r);
                assert_eq!(as_naive(&product(id, l, r).unwrap()), want, "closed {id} {l} * {r}");
                assert_eq!(as_naive(&oracle_product(&alg, l, r).unwrap()), want, "oracle {id} {l} * {r}");
            }
        }
    }
}

#[test]
fn naive_heisenberg_value() {
    let got = naive_product(
        AlgebraId::N3_1,
        &Monomial::new(vec![0, 0, 2]),
        &Monomial::new(vec![0, 2, 0]),
    );
    let want: Naive = [(vec![0, 2, 2], 1), (vec![1, 1, 1], -4), (vec![2, 0, 0], 2)]
        .into_iter()
        .collect();
    assert_eq!(got, want);
}

#[test]
fn naive_tables_match_catalog() {
    for id in AlgebraId::ALL {
        let alg = id.algebra();
        for i in 1..=id.dim() {
            for j in 1..i {
                let expected: Vec<(usize, uea::Rational)> = table(id)
                    .iter()
                    .filter(|&&(a, b, _)| a == i && b == j)
                    .map(|&(_, _, g)| (g, uea::poly::rational(-1)))
                    .collect();
                assert_eq!(alg.bracket_form(i, j), expected.as_slice(), "{id} [{i},{j}]");
            }
        }
    }
}
