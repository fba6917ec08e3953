//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any gating criterion fails.

use std::panic::{self, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::sync::OnceLock;
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use uea::closed_form::lemmas::render;
use uea::closed_form::{divided_power_coeff, Lemma, Role};
use uea::lie::{engel_check, lower_central_series, validate, CATALOG};
use uea::oracle::{oracle_multiply, straighten_word_with, Strategy as Rewrite};
use uea::poly::rational;
use uea::table::{generate_table, Engine, TableSource};
use uea::{builtin, oracle_product, product, AlgebraId, LieAlgebraSpec, Monomial, Polynomial, Rational};

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    gating: bool,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: "01", title: "oracle equivalence on the full grid", gating: true, run: c01_oracle_equivalence },
    Criterion { id: "01b", title: "oracle equivalence, dim 5 at degree 4", gating: true, run: c01_dim5_degree4 },
    Criterion { id: "02", title: "spot values and lemma base cases", gating: true, run: c02_spot_values },
    Criterion { id: "03", title: "axioms on catalog and corrupted fixtures", gating: true, run: c03_axioms },
    Criterion { id: "04", title: "nilpotency classes and Engel check", gating: true, run: c04_nilpotency },
    Criterion { id: "05", title: "algebraic laws (property tests)", gating: true, run: c05_laws },
    Criterion { id: "06", title: "integrality on the full grid", gating: true, run: c06_integrality },
    Criterion { id: "07", title: "divided-power consistency", gating: true, run: c07_divided_powers },
    Criterion { id: "08", title: "confluence of rewriting strategies", gating: true, run: c08_confluence },
    Criterion { id: "09", title: "deterministic tables and cross-check", gating: true, run: c09_determinism },
    Criterion { id: "10", title: "closed form >= 10x faster than oracle (non-gating)", gating: false, run: c10_performance },
];

fn main() {
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for c in CRITERIA {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(c.run))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Err(msg)
            });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {}: PASS ({detail}) [{secs:.2}s]", c.id, c.title),
            Err(detail) => {
                println!("criterion {} {}: FAIL ({detail}) [{secs:.2}s]", c.id, c.title);
                if c.gating {
                    failed += 1;
                }
            }
        }
    }
    if failed > 0 {
        println!("{failed} gating criterion(s) failed");
        std::process::exit(1);
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

fn grid_degree(id: AlgebraId) -> u32 {
    if id.dim() <= 4 {
        4
    } else {
        3
    }
}

struct GridResult {
    pairs: usize,
    coefficients: usize,
    non_integral: Vec<String>,
}

/// Compares both engines on every monomial pair up to the degree bound.
fn run_grid(id: AlgebraId, degree: u32) -> Result<GridResult, String> {
    let alg = id.algebra();
    let monos = Monomial::enumerate(id.dim(), degree);
    let pairs: Vec<(&Monomial, &Monomial)> =
        monos.iter().flat_map(|l| monos.iter().map(move |r| (l, r))).collect();
    let results: Vec<Result<Polynomial, String>> = pairs
        .par_iter()
        .map(|(l, r)| {
            let closed = product(id, l, r).map_err(|e| e.to_string())?;
            let oracle = oracle_product(&alg, l, r).map_err(|e| e.to_string())?;
            if closed != oracle {
                return Err(format!("{id}: {l} * {r}: closed {closed} vs oracle {oracle}"));
            }
            Ok(closed)
        })
        .collect();
    let mut out = GridResult {
        pairs: pairs.len(),
        coefficients: 0,
        non_integral: Vec::new(),
    };
    for ((l, r), res) in pairs.iter().zip(results) {
        let p = res?;
        out.coefficients += p.len();
        if !p.is_integral() {
            out.non_integral.push(format!("{id}: {l} * {r} = {p}"));
        }
    }
    Ok(out)
}

fn full_grid() -> &'static Result<Vec<(AlgebraId, GridResult)>, String> {
    static GRID: OnceLock<Result<Vec<(AlgebraId, GridResult)>, String>> = OnceLock::new();
    GRID.get_or_init(|| {
        AlgebraId::ALL
            .iter()
            .map(|&id| run_grid(id, grid_degree(id)).map(|g| (id, g)))
            .collect()
    })
}

fn c01_oracle_equivalence() -> Outcome {
    let grid = full_grid().as_ref().map_err(Clone::clone)?;
    let pairs: usize = grid.iter().map(|(_, g)| g.pairs).sum();
    let per: Vec<String> = grid.iter().map(|(id, g)| format!("{id}:{}", g.pairs)).collect();
    Ok(format!("{pairs} pairs exact, {}", per.join(" ")))
}

fn c01_dim5_degree4() -> Outcome {
    let mut pairs = 0;
    for id in AlgebraId::ALL.into_iter().filter(|id| id.dim() == 5) {
        let g = run_grid(id, 4)?;
        ensure(g.non_integral.is_empty(), || g.non_integral.join("; "))?;
        pairs += g.pairs;
    }
    Ok(format!("{pairs} pairs exact"))
}

fn c02_spot_values() -> Outcome {
    let checks = [
        (AlgebraId::N3_1, mono(&[0, 0, 1]), mono(&[0, 1, 0]), "x2*x3 - x1"),
        (AlgebraId::N3_1, mono(&[0, 0, 2]), mono(&[0, 2, 0]), "x2^2*x3^2 - 4*x1*x2*x3 + 2*x1^2"),
        (AlgebraId::N5_6, mono(&[0, 0, 0, 0, 2]), mono(&[0, 0, 0, 1, 0]), "x4*x5^2 - 2*x3*x5 + x2"),
    ];
    for (id, l, r, want) in &checks {
        let got = product(*id, l, r).map_err(|e| e.to_string())?.to_string();
        ensure(got == *want, || format!("{id} {l} * {r}: got {got}, want {want}"))?;
        let oracle = oracle_product(&id.algebra(), l, r).map_err(|e| e.to_string())?.to_string();
        ensure(oracle == *want, || format!("oracle {id} {l} * {r}: got {oracle}"))?;
    }
    let bases = [
        (Lemma::Acd, 2, 1, "ba^2 + 2*ca + d"),
        (Lemma::BcdAcg, 1, 2, "b^2a + 2*cb + d"),
        (Lemma::Chain, 3, 1, "ba^3 + 3*ca^2 + 3*da + g"),
        (Lemma::ChainBc, 1, 2, "b^2a + 2*cb - g"),
        (Lemma::Cpr, 1, 1, "ba + c"),
    ];
    for (lemma, t, u, want) in bases {
        let got = render(&lemma.terms(t, u));
        ensure(got == want, || format!("{lemma:?}({t},{u}): got {got}, want {want}"))?;
    }
    Ok(format!("{} products, {} base cases", checks.len(), bases.len()))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn c03_axioms() -> Outcome {
    for name in CATALOG {
        let report = validate(builtin(name).unwrap().spec());
        ensure(report.ok, || format!("{name}: {report}"))?;
    }
    let cases = [
        ("corrupted.json", (5, 4, 3), Polynomial::linear(5, [(1, rational(-1))])),
        ("sl2_flipped.json", (3, 2, 1), Polynomial::linear(3, [(3, rational(4))])),
    ];
    for (file, triple, residual) in &cases {
        let text = std::fs::read_to_string(fixture(file)).map_err(|e| e.to_string())?;
        let spec = LieAlgebraSpec::from_json(&text).map_err(|e| e.to_string())?;
        let report = validate(&spec);
        ensure(!report.ok, || format!("{file} passed validation"))?;
        let found: Vec<_> = report.jacobi_violations().collect();
        ensure(
            found.iter().any(|(t, r)| *t == triple && *r == residual),
            || format!("{file}: expected residual {residual} at {triple:?}, got {report}"),
        )?;
    }
    let status = Command::new(env!("CARGO_BIN_EXE_uea"))
        .args(["validate", "--spec"])
        .arg(fixture("corrupted.json"))
        .output()
        .map_err(|e| e.to_string())?;
    ensure(status.status.code() == Some(2), || format!("validate exit {:?}", status.status.code()))?;
    Ok("8 catalog algebras valid; residual -x1 at (5,4,3) and 4*x3 at (3,2,1)".into())
}

fn c04_nilpotency() -> Outcome {
    let expected = [2, 3, 2, 3, 2, 3, 4, 4];
    let mut got = Vec::new();
    for (name, class) in CATALOG.iter().zip(expected) {
        let alg = builtin(name).unwrap();
        let profile = lower_central_series(&alg);
        ensure(profile.class == Some(class), || {
            format!("{name}: class {:?}, dims {:?}", profile.class, profile.series_dims)
        })?;
        engel_check(&alg).map_err(|e| format!("{name}: {e}"))?;
        got.push(format!("{name}:{class}"));
    }
    Ok(got.join(" "))
}

fn closed_mul(id: AlgebraId, p: &Polynomial, q: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(id.dim());
    for (a, ca) in p.terms() {
        for (b, cb) in q.terms() {
            acc.add_scaled(&(ca * cb), &product(id, a, b).unwrap()).unwrap();
        }
    }
    acc
}

fn arb_id() -> impl Strategy<Value = AlgebraId> {
    prop::sample::select(AlgebraId::ALL.to_vec())
}

fn arb_mono(dim: usize, max_degree: u32) -> impl Strategy<Value = Monomial> {
    prop::sample::select(Monomial::enumerate(dim, max_degree))
}

fn with_monos(k: usize, max_degree: u32) -> impl Strategy<Value = (AlgebraId, Vec<Monomial>)> {
    arb_id().prop_flat_map(move |id| {
        (Just(id), prop::collection::vec(arb_mono(id.dim(), max_degree), k))
    })
}

const CASES: u32 = 256;

fn runner() -> TestRunner {
    TestRunner::new_with_rng(
        Config {
            cases: CASES,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    )
}

fn c05_laws() -> Outcome {
    runner()
        .run(&with_monos(3, 3), |(id, m)| {
            let alg = id.algebra();
            let [a, b, c] = [&m[0], &m[1], &m[2]].map(|x| Polynomial::from_monomial(x.clone()));
            let left = closed_mul(id, &closed_mul(id, &a, &b), &c);
            let right = closed_mul(id, &a, &closed_mul(id, &b, &c));
            prop_assert_eq!(&left, &right);
            let left_o = oracle_multiply(&alg, &oracle_multiply(&alg, &a, &b).unwrap(), &c).unwrap();
            prop_assert_eq!(&left_o, &left);
            Ok(())
        })
        .map_err(|e| format!("associativity: {e}"))?;

    runner()
        .run(&with_monos(1, 4), |(id, m)| {
            let one = Monomial::one(id.dim());
            let pm = Polynomial::from_monomial(m[0].clone());
            prop_assert_eq!(product(id, &one, &m[0]).unwrap(), pm.clone());
            prop_assert_eq!(product(id, &m[0], &one).unwrap(), pm.clone());
            prop_assert_eq!(oracle_product(&id.algebra(), &one, &m[0]).unwrap(), pm.clone());
            prop_assert_eq!(oracle_product(&id.algebra(), &m[0], &one).unwrap(), pm);
            Ok(())
        })
        .map_err(|e| format!("unit laws: {e}"))?;

    let gens = arb_id().prop_flat_map(|id| (Just(id), 1..=id.dim(), 1..=id.dim()));
    runner()
        .run(&gens, |(id, i, j)| {
            let alg = id.algebra();
            let (xi, xj) = (Monomial::generator(id.dim(), i), Monomial::generator(id.dim(), j));
            let comm = product(id, &xi, &xj)
                .unwrap()
                .checked_sub(&product(id, &xj, &xi).unwrap())
                .unwrap();
            prop_assert_eq!(comm, alg.bracket(i, j).unwrap());
            Ok(())
        })
        .map_err(|e| format!("commutator: {e}"))?;

    runner()
        .run(&with_monos(2, 3), |(id, m)| {
            let (l, r) = (&m[0], &m[1]);
            let p = product(id, l, r).unwrap();
            let top = l.total_degree() + r.total_degree();
            prop_assert!(p.terms().all(|(x, _)| x.total_degree() <= top));
            let tops: Vec<_> = p.terms().filter(|(x, _)| x.total_degree() == top).collect();
            prop_assert_eq!(tops.len(), 1);
            prop_assert_eq!(tops[0].0, &l.mul_commutative(r));
            prop_assert_eq!(tops[0].1, &rational(1));
            Ok(())
        })
        .map_err(|e| format!("filtration: {e}"))?;

    Ok(format!("4 laws x {CASES} cases"))
}

fn c06_integrality() -> Outcome {
    let grid = full_grid().as_ref().map_err(Clone::clone)?;
    let bad: Vec<&String> = grid.iter().flat_map(|(_, g)| &g.non_integral).collect();
    ensure(bad.is_empty(), || format!("{} non-integral: {:?}", bad.len(), bad.first()))?;
    let coeffs: usize = grid.iter().map(|(_, g)| g.coefficients).sum();
    Ok(format!("{coeffs} structure constants, all with denominator 1"))
}

fn c07_divided_powers() -> Outcome {
    let mut checked = 0;
    for lemma in Lemma::ALL {
        for t in 0..=6u32 {
            for u in 0..=6u32 {
                let standard = lemma.terms(t, u);
                let divided = lemma.divided_terms(t, u);
                ensure(standard.len() == divided.len(), || format!("{lemma:?}({t},{u}) length"))?;
                let scale = (1..=t).chain(1..=u).fold(rational(1), |acc, k| acc * rational(k as i64));
                for (s, d) in standard.iter().zip(&divided) {
                    let mut c: Rational = &scale * &d.weight;
                    for role in Role::ALL {
                        c *= divided_power_coeff(d.exponents[role] as i64).unwrap();
                    }
                    c *= divided_power_coeff(d.neg_g as i64).unwrap();
                    ensure(c == s.coeff && s.multi_index == d.multi_index, || {
                        format!("{lemma:?}({t},{u}) at {:?}: {} vs {c}", s.multi_index, s.coeff)
                    })?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} summands over 5 identities, t,u <= 6"))
}

fn c08_confluence() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for name in CATALOG {
        let alg = builtin(name).unwrap();
        for _ in 0..1000 {
            let len = rng.gen_range(0..=8);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=alg.dim())).collect();
            let left = straighten_word_with(&alg, &word, Rewrite::Leftmost).unwrap();
            let right = straighten_word_with(&alg, &word, Rewrite::Rightmost).unwrap();
            ensure(left == right, || format!("{name} {word:?}: {left} vs {right}"))?;
        }
    }
    Ok("8 algebras x 1000 words".into())
}

fn c09_determinism() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut outputs = Vec::new();
    for n in 0..2 {
        let path = dir.path().join(format!("run{n}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_uea"))
            .args(["table", "--algebra", "n5_2", "--max-degree", "2", "--format", "json", "--out"])
            .arg(&path)
            .status()
            .map_err(|e| e.to_string())?;
        ensure(status.success(), || format!("table exit {status}"))?;
        outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
    }
    ensure(outputs[0] == outputs[1], || "table JSON differs between runs".into())?;
    let (manifest, _) = generate_table(&TableSource::Catalog(AlgebraId::N5_2), 2, Engine::CrossChecked)
        .map_err(|e| e.to_string())?;
    ensure(manifest.record_count == 21 * 21, || format!("{} records", manifest.record_count))?;
    let (m56, _) = generate_table(&TableSource::Catalog(AlgebraId::N5_6), 2, Engine::CrossChecked)
        .map_err(|e| e.to_string())?;
    Ok(format!(
        "{} identical bytes; cross-checked n5_2 {} and n5_6 {} records, 0 divergences",
        outputs[0].len(),
        manifest.record_count,
        m56.record_count
    ))
}

fn c10_performance() -> Outcome {
    let r = uea::cli::bench(AlgebraId::N5_6, 3, 5).map_err(|e| e.to_string())?;
    let profile = if cfg!(debug_assertions) { "debug" } else { "release" };
    let detail = format!(
        "{profile} build, {} pairs: closed {:.2} ms, oracle {:.2} ms, speedup {:.1}x",
        r.pairs,
        r.closed.as_secs_f64() * 1e3,
        r.oracle.as_secs_f64() * 1e3,
        r.speedup()
    );
    if r.speedup() >= 10.0 {
        Ok(detail)
    } else {
        Err(detail)
    }
}
