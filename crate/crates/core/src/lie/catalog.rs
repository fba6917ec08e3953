use super::{BracketTable, LieAlgebra, LieAlgebraSpec};
use crate::error::{Error, Result};
use crate::poly::rational;

/// The nilpotent algebras with closed-form products, in dimension order.
pub const CATALOG: [&str; 8] = [
    "n3_1", "n4_1", "n5_1", "n5_2", "n5_3", "n5_4", "n5_5", "n5_6",
];

const MAX_ABELIAN: usize = 8;

pub fn catalog_names() -> Vec<String> {
    CATALOG
        .iter()
        .map(|s| s.to_string())
        .chain((1..=MAX_ABELIAN).map(|k| format!("abelian_{k}")))
        .collect()
}

/// `(i, j, g)` meaning `[x_i, x_j] = -x_g`. Every nonzero bracket of the
/// catalog has this shape.
fn neg_brackets(name: &str) -> Option<(usize, &'static [(usize, usize, usize)])> {
    let table: (usize, &'static [(usize, usize, usize)]) = match name {
        "n3_1" => (3, &[(3, 2, 1)]),
        "n4_1" => (4, &[(4, 2, 1), (4, 3, 2)]),
        "n5_1" => (5, &[(5, 3, 1), (5, 4, 2)]),
        "n5_2" => (5, &[(4, 3, 2), (5, 3, 1), (5, 4, 3)]),
        "n5_3" => (5, &[(4, 2, 1), (5, 3, 1)]),
        "n5_4" => (5, &[(4, 3, 1), (5, 2, 1), (5, 4, 2)]),
        "n5_5" => (5, &[(5, 2, 1), (5, 3, 2), (5, 4, 3)]),
        "n5_6" => (5, &[(4, 3, 1), (5, 2, 1), (5, 3, 2), (5, 4, 3)]),
        _ => return None,
    };
    Some(table)
}

pub fn builtin(name: &str) -> Result<LieAlgebra> {
    let spec = if let Some((dim, brackets)) = neg_brackets(name) {
        let table = brackets
            .iter()
            .fold(BracketTable::new(), |t, &(i, j, g)| {
                t.with(i, j, vec![(g, rational(-1))])
            });
        LieAlgebraSpec::new(name, dim, table)
    } else {
        let dim = name
            .strip_prefix("abelian_")
            .and_then(|k| k.parse::<usize>().ok())
            .filter(|k| (1..=MAX_ABELIAN).contains(k))
            .ok_or_else(|| Error::UnknownAlgebra(name.to_string()))?;
        LieAlgebraSpec::new(name, dim, BracketTable::new())
    };
    LieAlgebra::new(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    #[test]
    fn n31_has_one_bracket() {
        let n31 = builtin("n3_1").unwrap();
        assert_eq!(n31.dim(), 3);
        assert_eq!(n31.spec().brackets.entries.len(), 1);
        assert_eq!(
            n31.bracket(3, 2).unwrap(),
            Polynomial::linear(3, [(1, rational(-1))])
        );
    }

    #[test]
    fn n56_brackets() {
        let n56 = builtin("n5_6").unwrap();
        assert_eq!(n56.dim(), 5);
        let mut nonzero = Vec::new();
        for i in 1..=5 {
            for j in 1..i {
                let b = n56.bracket(i, j).unwrap();
                if !b.is_zero() {
                    nonzero.push((i, j, b.to_string()));
                }
            }
        }
        assert_eq!(
            nonzero,
            vec![
                (4, 3, "-x1".to_string()),
                (5, 2, "-x1".to_string()),
                (5, 3, "-x2".to_string()),
                (5, 4, "-x3".to_string()),
            ]
        );
    }

    #[test]
    fn abelian_family() {
        let a4 = builtin("abelian_4").unwrap();
        assert_eq!(a4.dim(), 4);
        assert!(a4.spec().brackets.entries.is_empty());
        assert!(a4.is_abelian());
        assert!(builtin("abelian_8").is_ok());
        assert!(builtin("abelian_9").is_err());
        assert!(builtin("abelian_0").is_err());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(builtin("sl2"), Err(Error::UnknownAlgebra(_))));
        assert!(matches!(builtin("n5_7"), Err(Error::UnknownAlgebra(_))));
    }
}
