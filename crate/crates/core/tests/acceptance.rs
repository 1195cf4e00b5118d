//! Exit criteria for the library. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion; any failure makes the process exit non-zero.

mod common;

use std::path::PathBuf;
use std::process::ExitCode;

use neutrotrop::algebra::{self, AlgebraMode, InfinityPolicy};
use neutrotrop::axioms::{check_axioms, check_axioms_with, AxiomConfig, Law, ScalarAlgebra};
use neutrotrop::files::parse_matrix;
use neutrotrop::{
    format_nn, parse_nn, shortest_paths, NeutroMatrix, NeutroNumber, ReductionOp, Result,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn data(name: &str) -> NeutroMatrix {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_matrix(&text).unwrap_or_else(|e| panic!("{name}: {e}"))
}

fn lit(s: &str) -> NeutroNumber {
    parse_nn(s).unwrap()
}

fn grid(rows: &[&[&str]]) -> NeutroMatrix {
    NeutroMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| lit(s)).collect())
            .collect(),
    )
    .unwrap()
}

fn expect_matrix(got: &NeutroMatrix, want: &NeutroMatrix) -> Outcome {
    ensure!(
        got == want,
        "got\n{}want\n{}",
        neutrotrop::files::write_matrix(got),
        neutrotrop::files::write_matrix(want)
    );
    Ok(())
}

fn golden_min_addition() -> Outcome {
    let d = data("P.nnm")
        .tropical_add(&data("Q.nnm"), AlgebraMode::Min)
        .map_err(|e| e.to_string())?;
    // d22: the printed result reads "-2+3I", but its own working
    // Min(23,3)+Min(-2,5)I evaluates to 3-2I. The working is taken as correct.
    expect_matrix(&d, &grid(&[&["-8+I", "5-I"], &["3+8I", "3-2I"]]))
}

fn golden_max_addition() -> Outcome {
    let w = data("X.nnm")
        .tropical_add(&data("Z.nnm"), AlgebraMode::Max)
        .map_err(|e| e.to_string())?;
    expect_matrix(&w, &grid(&[&["3+2I", "13+3I"], &["7+9I", "23+5I"]]))
}

fn golden_plus_fold_product() -> Outcome {
    let c = data("A.nnm")
        .product(&data("B.nnm"), AlgebraMode::Min, ReductionOp::PlusFold)
        .map_err(|e| e.to_string())?;
    expect_matrix(
        &c,
        &grid(&[&["7", "0", "3+2I", "7-2I"], &["9+2I", "2+2I", "5+4I", "9"]]),
    )
}

/// `fold_k (a_0k + b_k0)` computed directly on the float components.
fn brute_force_c11(a: &NeutroMatrix, b: &NeutroMatrix, pick: fn(f64, f64) -> f64) -> NeutroNumber {
    let terms: Vec<(f64, f64)> = (0..a.cols())
        .map(|k| {
            let (xa, xb) = parts(a[(0, k)]);
            let (za, zb) = parts(b[(k, 0)]);
            (xa + za, xb + zb)
        })
        .collect();
    let (mut ra, mut rb) = terms[0];
    for &(ta, tb) in &terms[1..] {
        ra = pick(ra, ta);
        rb = pick(rb, tb);
    }
    from_parts(ra, rb)
}

fn formal_product_cross_check() -> Outcome {
    let (a, b) = (data("A.nnm"), data("B.nnm"));
    let max_oracle = brute_force_c11(&a, &b, f64::max);
    let min_oracle = brute_force_c11(&a, &b, f64::min);
    ensure!(max_oracle == lit("5+I"), "max oracle gave {max_oracle}");
    ensure!(min_oracle == lit("-1-I"), "min oracle gave {min_oracle}");

    let cmax = a
        .product(&b, AlgebraMode::Max, ReductionOp::TropicalMax)
        .map_err(|e| e.to_string())?;
    let cmin = a
        .product(&b, AlgebraMode::Min, ReductionOp::TropicalMin)
        .map_err(|e| e.to_string())?;
    ensure!(
        cmax[(0, 0)] == max_oracle,
        "TropicalMax c11 = {}",
        cmax[(0, 0)]
    );
    ensure!(
        cmin[(0, 0)] == min_oracle,
        "TropicalMin c11 = {}",
        cmin[(0, 0)]
    );
    Ok(())
}

struct ClassicalPlusAdd(AlgebraMode);

impl ScalarAlgebra for ClassicalPlusAdd {
    fn add(&self, x: NeutroNumber, z: NeutroNumber) -> NeutroNumber {
        algebra::mul(x, z, self.0)
    }
    fn mul(&self, x: NeutroNumber, z: NeutroNumber) -> Result<NeutroNumber> {
        Ok(algebra::mul(x, z, self.0))
    }
    fn zero(&self) -> NeutroNumber {
        self.0.additive_identity()
    }
    fn one(&self) -> NeutroNumber {
        algebra::multiplicative_identity()
    }
}

fn axiom_suite() -> Outcome {
    for mode in [AlgebraMode::Min, AlgebraMode::Max] {
        for include_infinities in [false, true] {
            let config = AxiomConfig {
                mode,
                sample_count: 10_000,
                seed: 7,
                component_range: -50..=50,
                include_infinities,
                infinity_policy: InfinityPolicy::Resolve,
            };
            let report = check_axioms(&config).map_err(|e| e.to_string())?;
            ensure!(report.laws.len() == 10, "expected 10 laws");
            ensure!(
                report.passed() && report.laws.iter().all(|l| l.trials == 10_000),
                "{mode} infinities={include_infinities}:\n{}",
                report.summary()
            );
        }
        let mutant = check_axioms_with(
            &AxiomConfig {
                seed: 7,
                ..AxiomConfig::new(mode)
            },
            &ClassicalPlusAdd(mode),
        )
        .map_err(|e| e.to_string())?;
        ensure!(mutant.total_failures() > 0, "{mode}: mutant passed");
        let idem = mutant.law(Law::AddIdempotency).unwrap();
        ensure!(
            idem.failures > 0 && idem.counterexample.is_some(),
            "{mode}: mutant idempotency not caught"
        );
    }
    Ok(())
}

fn matrix_law_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let err = |e: neutrotrop::Error| e.to_string();
    for mode in [AlgebraMode::Min, AlgebraMode::Max] {
        let r = ReductionOp::tropical(mode);
        let id = NeutroMatrix::identity(3, mode).map_err(err)?;
        for trial in 0..1_000 {
            let a = random_matrix(&mut rng, 3, 3, -20, 20);
            let b = random_matrix(&mut rng, 3, 3, -20, 20);
            let c = random_matrix(&mut rng, 3, 3, -20, 20);
            let ab_c = a
                .product(&b, mode, r)
                .map_err(err)?
                .product(&c, mode, r)
                .map_err(err)?;
            let a_bc = a
                .product(&b.product(&c, mode, r).map_err(err)?, mode, r)
                .map_err(err)?;
            ensure!(ab_c == a_bc, "{mode} trial {trial}: associativity");

            let b_plus_c = b.tropical_add(&c, mode).map_err(err)?;
            let left = a.product(&b_plus_c, mode, r).map_err(err)?;
            let left_split = a
                .product(&b, mode, r)
                .map_err(err)?
                .tropical_add(&a.product(&c, mode, r).map_err(err)?, mode)
                .map_err(err)?;
            ensure!(
                left == left_split,
                "{mode} trial {trial}: left distributivity"
            );

            let right = b_plus_c.product(&a, mode, r).map_err(err)?;
            let right_split = b
                .product(&a, mode, r)
                .map_err(err)?
                .tropical_add(&c.product(&a, mode, r).map_err(err)?, mode)
                .map_err(err)?;
            ensure!(
                right == right_split,
                "{mode} trial {trial}: right distributivity"
            );

            ensure!(
                id.product(&a, mode, r).map_err(err)? == a,
                "{mode} trial {trial}: I⊗A"
            );
            ensure!(
                a.product(&id, mode, r).map_err(err)? == a,
                "{mode} trial {trial}: A⊗I"
            );
        }
    }
    Ok(())
}

fn degenerate_oracle_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for trial in 0..1_000 {
        let x: f64 = rng.random_range(-1000..=1000).into();
        let z: f64 = rng.random_range(-1000..=1000).into();
        let (nx, nz) = (from_parts(x, 0.0), from_parts(z, 0.0));
        let sum = algebra::add_min(nx, nz);
        let prod = algebra::mul(nx, nz, AlgebraMode::Min);
        ensure!(
            parts(sum) == (minplus::add(x, z), 0.0),
            "trial {trial}: add {x} {z}"
        );
        ensure!(
            parts(prod) == (minplus::mul(x, z), 0.0),
            "trial {trial}: mul {x} {z}"
        );
    }
    for trial in 0..200 {
        let n = rng.random_range(1..=6);
        let g = random_graph(&mut rng, n, 0, 20, false);
        let weights: Vec<Option<f64>> = (0..n * n)
            .map(|idx| g.weight(idx / n, idx % n).map(|w| w.a.value()))
            .collect();
        let oracle = floyd_warshall(n, &weights);
        let got = shortest_paths(&g).distances;
        for (idx, want) in oracle.iter().enumerate() {
            let have = got.entries()[idx].a.value();
            ensure!(
                have == *want,
                "graph {trial} (n={n}) entry {idx}: {have} vs {want}"
            );
        }
    }
    Ok(())
}

fn shortest_path_enumeration_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    for trial in 0..100 {
        let n = rng.random_range(1..=6);
        let g = random_graph(&mut rng, n, 0, 9, true);
        let want = as_matrix(n, &simple_path_costs(&g));
        let got = shortest_paths(&g);
        ensure!(
            !got.cycle_warning,
            "graph {trial}: unexpected cycle warning"
        );
        expect_matrix(&got.distances, &want).map_err(|e| format!("graph {trial} (n={n}): {e}"))?;
    }
    Ok(())
}

fn random_component<R: Rng>(rng: &mut R) -> f64 {
    match rng.random_range(0..8) {
        0 => f64::INFINITY,
        1 => f64::NEG_INFINITY,
        2 => 0.0,
        3 | 4 => rng.random_range(-1_000_000..=1_000_000).into(),
        5 => rng.random_range(-1000..=1000) as f64 / 8.0,
        _ => loop {
            let v = f64::from_bits(rng.random());
            if v.is_finite() {
                break v;
            }
        },
    }
}

fn parser_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for trial in 0..10_000 {
        let x = from_parts(random_component(&mut rng), random_component(&mut rng));
        let text = format_nn(&x);
        let back = parse_nn(&text).map_err(|e| format!("trial {trial}: {text:?}: {e}"))?;
        ensure!(back == x, "trial {trial}: {x:?} -> {text:?} -> {back:?}");
    }
    let p = grid(&[&["-8+I", "5-I"], &["3+8I", "23-2I"]]);
    let q = grid(&[&["3+2I", "13+3I"], &["7+9I", "3+5I"]]);
    let a = grid(&[&["-1", "2", "-I"], &["3", "I", "0"]]);
    let b = grid(&[
        &["I", "1", "2", "4"],
        &["1", "I", "0", "2"],
        &["5", "-2", "3I", "-I"],
    ]);
    // components entered by hand, independent of the literal parser
    ensure!(
        p[(0, 0)] == nn(-8, 1) && p[(1, 1)] == nn(23, -2),
        "P literal values"
    );
    ensure!(
        b[(2, 2)] == nn(0, 3) && b[(2, 3)] == nn(0, -1),
        "B literal values"
    );
    for (file, want) in [
        ("P.nnm", &p),
        ("Q.nnm", &q),
        ("X.nnm", &p),
        ("Z.nnm", &q),
        ("A.nnm", &a),
        ("B.nnm", &b),
    ] {
        ensure!(
            &data(file) == want,
            "{file} does not match the transcription"
        );
    }
    Ok(())
}

fn inverse_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for mode in [AlgebraMode::Min, AlgebraMode::Max] {
        for trial in 0..10_000 {
            let x = int_nn(&mut rng, -1_000_000, 1_000_000);
            let z = int_nn(&mut rng, -1_000_000, 1_000_000);
            let back = algebra::div(algebra::mul(x, z, mode), z).map_err(|e| e.to_string())?;
            ensure!(
                back == x,
                "{mode} trial {trial}: ({x} ⊗ {z}) ⊘ {z} = {back}"
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("1 golden min addition (P ⊕ Q)", golden_min_addition),
        ("2 golden max addition (X ⊕′ Z)", golden_max_addition),
        (
            "3 golden PlusFold product (A ⊗ B)",
            golden_plus_fold_product,
        ),
        (
            "4 tropical product c11 vs brute-force fold",
            formal_product_cross_check,
        ),
        ("5 axiom suite, both modes, mutation detected", axiom_suite),
        (
            "6 matrix laws on 1,000 random 3x3 triples",
            matrix_law_suite,
        ),
        (
            "7 degenerate scalars vs real min-plus / Floyd-Warshall",
            degenerate_oracle_equivalence,
        ),
        (
            "8 shortest paths vs simple-path enumeration",
            shortest_path_enumeration_oracle,
        ),
        (
            "9 literal round-trip and transcribed matrices",
            parser_round_trip,
        ),
        ("10 inverse law (x ⊗ z) ⊘ z = x", inverse_law),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(()) => println!("PASS  {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}\n      {}", why.replace('\n', "\n      "));
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
