//! Acceptance suite: one pass/fail line per criterion.

use std::collections::{BTreeMap, BTreeSet};
use std::panic;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rotinv_core::counting::{closed_form_check, poincare_series};
use rotinv_core::kravchuk::{
    eigenvector, pair_product_closed_form, spectrum, zero_weight_closed_form,
};
use rotinv_core::moments::{
    evaluate_invariant, evaluate_poly, normalized_from, rotate_point_cloud, rotate_raster, Point,
};
use rotinv_core::monoid::{generating_vector, hilbert_basis, polynomial_generators};
use rotinv_core::rational::{
    beta_values, count_rational, hu_classical, independence_check, phi_direct, phi_from_beta,
    rational_generators,
};
use rotinv_core::symbolic::{build_matrix, character, expand_monomial, is_invariant, dim_w};
use rotinv_core::{EigenSymbol, ExponentVector, GaussianRational, PointCloud, RasterImage};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sym(n: u32, s: i32) -> EigenSymbol {
    EigenSymbol::new(n, s).unwrap()
}

fn gauss(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

fn eigen_fixtures() -> Outcome {
    let printed: [((u32, i32), Vec<(i64, i64)>); 7] = [
        ((2, 2), vec![(1, 0), (0, 2), (-1, 0)]),
        ((2, 0), vec![(1, 0), (0, 0), (1, 0)]),
        ((2, -2), vec![(1, 0), (0, -2), (-1, 0)]),
        ((3, 3), vec![(1, 0), (0, 3), (-3, 0), (0, -1)]),
        ((3, 1), vec![(1, 0), (0, 1), (1, 0), (0, 1)]),
        ((3, -1), vec![(1, 0), (0, -1), (1, 0), (0, -1)]),
        ((3, -3), vec![(1, 0), (0, -3), (-3, 0), (0, 1)]),
    ];
    for ((n, s), coeffs) in &printed {
        let form = eigenvector(*n, *s).map_err(|e| e.to_string())?;
        let expected: Vec<GaussianRational> = coeffs.iter().map(|&(re, im)| gauss(re, im)).collect();
        ensure(form.coefficients == expected, || format!("e_{n}({s}i) = {form}"))?;
        ensure(form.coefficients.iter().all(GaussianRational::is_gaussian_integer), || {
            format!("e_{n}({s}i) has non-integral coefficients")
        })?;
    }
    Ok("7 eigenforms for d = 2, 3 match exactly".into())
}

fn exact_diagonalization() -> Outcome {
    let mut checked = 0;
    for d in 1..=8 {
        let m = build_matrix(d).map_err(|e| e.to_string())?;
        for s in spectrum(d).map_err(|e| e.to_string())? {
            let e = eigenvector(d, s).map_err(|e| e.to_string())?;
            let lhs = m.apply(&e.coefficients);
            let lambda = gauss(0, s as i64);
            let rhs: Vec<GaussianRational> = e.coefficients.iter().map(|c| &lambda * c).collect();
            ensure(lhs == rhs, || format!("M_{d} e != {s}i e"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} eigenpairs exact for d <= 8"))
}

fn histogram(d: u32, cap: u32) -> Result<(usize, BTreeMap<u32, usize>, u32), String> {
    let gens = polynomial_generators(d, cap).map_err(|e| e.to_string())?;
    let mut h = BTreeMap::new();
    for g in &gens {
        *h.entry(g.degree).or_insert(0) += 1;
    }
    let max = gens.iter().map(|g| g.degree).max().unwrap_or(0);
    Ok((gens.len(), h, max))
}

fn generator_counts() -> Outcome {
    let (n2, _, _) = histogram(2, 32)?;
    let (n3, h3, _) = histogram(3, 32)?;
    let (n4, h4, _) = histogram(4, 32)?;
    let (n5, _, max5) = histogram(5, 12)?;
    ensure((n2, n3, n4, n5) == (2, 14, 65, 562), || format!("counts {n2} {n3} {n4} {n5}"))?;
    ensure(max5 == 9, || format!("d = 5 max degree {max5}"))?;
    let e3: BTreeMap<u32, usize> = [(1, 1), (2, 3), (3, 4), (4, 4), (5, 2)].into();
    let e4: BTreeMap<u32, usize> = [(1, 2), (2, 7), (3, 16), (4, 20), (5, 16), (6, 2), (7, 2)].into();
    ensure(h3 == e3, || format!("d = 3 histogram {h3:?}"))?;
    ensure(h4 == e4, || format!("d = 4 histogram {h4:?}"))?;

    // printed vectors use the coordinate order (x3, x2, x1, x0, y1, y2, y3)
    let order = [sym(3, 3), sym(2, 2), sym(3, 1), sym(2, 0), sym(3, -1), sym(2, -2), sym(3, -3)];
    let printed: [[u32; 7]; 14] = [
        [0, 0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 0, 1, 0],
        [1, 0, 0, 0, 0, 0, 1],
        [0, 0, 1, 0, 1, 0, 0],
        [1, 0, 0, 0, 1, 1, 0],
        [0, 1, 1, 0, 0, 0, 1],
        [0, 0, 2, 0, 0, 1, 0],
        [0, 1, 0, 0, 2, 0, 0],
        [1, 0, 1, 0, 0, 2, 0],
        [0, 2, 0, 0, 1, 0, 1],
        [1, 0, 0, 0, 3, 0, 0],
        [0, 0, 3, 0, 0, 0, 1],
        [2, 0, 0, 0, 0, 3, 0],
        [0, 3, 0, 0, 0, 0, 2],
    ];
    let expected: BTreeSet<ExponentVector> =
        printed.iter().map(|v| ExponentVector::from_dense(&order, v)).collect();
    let got: BTreeSet<ExponentVector> = hilbert_basis(&generating_vector(3).unwrap(), 32)
        .map_err(|e| e.to_string())?
        .into_iter()
        .collect();
    ensure(got == expected, || "d = 3 Hilbert basis differs from the 14 printed vectors".into())?;
    Ok("2, 14, 65, 562 generators; histograms and d = 3 basis match".into())
}

fn symbolic_invariance() -> Outcome {
    let mut total = 0;
    for d in 2..=4 {
        for g in polynomial_generators(d, 32).map_err(|e| e.to_string())? {
            let poly = expand_monomial(&g.monomial, d).map_err(|e| e.to_string())?;
            ensure(is_invariant(&poly, d).unwrap(), || format!("d = {d}: {} not annihilated", g.monomial))?;
            total += 1;
        }
    }
    Ok(format!("{total} generators annihilated by D exactly"))
}

fn series_fixtures() -> Outcome {
    let as_big = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
    let p3 = poincare_series(3, 9).map_err(|e| e.to_string())?.coefficients;
    let p4 = poincare_series(4, 9).map_err(|e| e.to_string())?.coefficients;
    ensure(p3 == as_big(&[1, 1, 4, 8, 18, 32, 58, 94, 151, 227]), || format!("d = 3 series {p3:?}"))?;
    ensure(p4 == as_big(&[1, 2, 10, 34, 105, 288, 720, 1660, 3588, 7326]), || format!("d = 4 series {p4:?}"))?;
    ensure(closed_form_check(3, 20).unwrap() && closed_form_check(4, 20).unwrap(), || {
        "closed form mismatch within 20 terms".into()
    })?;
    Ok("series for d = 3, 4 and closed forms to 20 terms".into())
}

fn character_fixture() -> Outcome {
    let ch = character(4).map_err(|e| e.to_string())?;
    let expected: BTreeMap<i32, u32> =
        [(-4, 1), (-3, 1), (-2, 2), (-1, 1), (0, 2), (1, 1), (2, 2), (3, 1), (4, 1)].into();
    ensure(ch == expected, || format!("character(4) = {ch:?}"))?;
    Ok("character(4) matches".into())
}

fn rational_tables() -> Outcome {
    let names = |d, p, q| -> Vec<String> {
        rational_generators(d, p, q).unwrap().iter().map(|g| g.short_name()).collect()
    };
    let d4 = names(4, 3, 1);
    let t4 = [
        "x20", "x40", "x22y22", "x31y31", "x33y33", "x42y42", "x44y44", "x22y31^2", "x42y31^2",
        "x33y31^3", "x44y31^4",
    ];
    ensure(d4 == t4, || format!("d = 4 table {d4:?}"))?;
    let d5: BTreeSet<String> = names(5, 3, 1).into_iter().collect();
    let t5: BTreeSet<String> = [
        "x20", "x40", "x22y22", "x31y31", "x33y33", "x42y42", "x44y44", "x55y55", "x53y53",
        "x51y51", "x51y31", "x22y31^2", "x42y31^2", "x33y31^3", "x53y31^3", "x44y31^4", "x55y31^5",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    ensure(d5 == t5, || format!("d = 5 table {d5:?}"))?;
    for d in 2..=8 {
        let c = count_rational(d).unwrap();
        ensure(c == (d + 4) * (d - 1) / 2 - 1, || format!("count_rational({d}) = {c}"))?;
    }
    Ok("11- and 17-element bases; counts for d <= 8".into())
}

fn independence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for d in 3..=5 {
        let gens = rational_generators(d, 3, 1).unwrap();
        let ok = independence_check(&gens, d, 5, &mut rng).map_err(|e| e.to_string())?;
        ensure(ok, || format!("d = {d}: Jacobian rank below {}", dim_w(d) - 1))?;
    }
    Ok("Jacobian rank dim W_d - 1 at 5 points for d = 3, 4, 5".into())
}

fn random_cloud(rng: &mut ChaCha8Rng, n: usize) -> PointCloud {
    PointCloud::new(
        (0..n)
            .map(|_| Point {
                x: rng.gen_range(-2.0..2.0),
                y: rng.gen_range(-2.0..2.0),
                w: rng.gen_range(0.1..1.0),
            })
            .collect(),
    )
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(f64::MIN_POSITIVE)
}

fn phi_dictionary() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let gens = rational_generators(4, 3, 1).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let eta = normalized_from(&random_cloud(&mut rng, 20), 4).map_err(|e| e.to_string())?;
        let phi = phi_from_beta(&beta_values(&gens, &eta).unwrap()).map_err(|e| e.to_string())?;
        let direct = phi_direct(&eta).unwrap();
        for (k, v) in &direct {
            worst = worst.max(rel(*v, phi[k]));
        }
    }
    ensure(worst <= 1e-9, || format!("max relative deviation {worst:.3e}"))?;
    Ok(format!("20 clouds, max relative deviation {worst:.2e}"))
}

fn cloud_invariance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let gens = rational_generators(4, 3, 1).unwrap();
    let (mut rot, mut sim) = (0.0f64, 0.0f64);
    for _ in 0..20 {
        let pc = random_cloud(&mut rng, 20);
        let eta = normalized_from(&pc, 4).map_err(|e| e.to_string())?;
        let base: Vec<Complex64> = gens.iter().map(|g| evaluate_invariant(g, &eta).unwrap()).collect();
        for theta in [0.3, 1.0, 2.5] {
            let eta_r = normalized_from(&rotate_point_cloud(&pc, theta), 4).unwrap();
            for (g, b) in gens.iter().zip(&base) {
                rot = rot.max(rel(*b, evaluate_invariant(g, &eta_r).unwrap()));
            }
        }
        let moved = pc.scaled(rng.gen_range(0.3..3.0)).translated(rng.gen_range(-5.0..5.0), rng.gen_range(-5.0..5.0));
        let eta_s = normalized_from(&moved, 4).unwrap();
        for (g, b) in gens.iter().zip(&base) {
            sim = sim.max(rel(*b, evaluate_invariant(g, &eta_s).unwrap()));
        }
    }
    ensure(rot <= 1e-9, || format!("rotation deviation {rot:.3e}"))?;
    ensure(sim <= 1e-10, || format!("translation/scale deviation {sim:.3e}"))?;
    Ok(format!("rotation {rot:.2e}, translation/scale {sim:.2e}"))
}

/// Three overlapping anisotropic Gaussians, off centre.
fn blob(size: usize) -> RasterImage {
    let n = size as f64;
    let bumps = [
        (0.50, 0.52, 0.055, 0.035, 1.0),
        (0.58, 0.46, 0.030, 0.045, 0.8),
        (0.44, 0.42, 0.035, 0.025, 0.6),
    ];
    RasterImage::from_fn(size, size, |x, y| {
        let (u, v) = (x / n, y / n);
        bumps
            .iter()
            .map(|&(cx, cy, sx, sy, a)| {
                let (dx, dy) = ((u - cx) / sx, (v - cy) / sy);
                a * (-0.5 * (dx * dx + dy * dy + 0.8 * dx * dy)).exp()
            })
            .sum()
    })
    .unwrap()
}

fn hu_deviation(size: usize) -> Result<f64, String> {
    let img = blob(size);
    let hu = hu_classical().unwrap();
    let eta = normalized_from(&img, 3).map_err(|e| e.to_string())?;
    let mut worst = 0.0f64;
    for theta in [0.3, 1.0, 2.5] {
        let eta_r = normalized_from(&rotate_raster(&img, theta), 3).map_err(|e| e.to_string())?;
        for h in &hu {
            let a = evaluate_poly(h, &eta).unwrap();
            let b = evaluate_poly(h, &eta_r).unwrap();
            worst = worst.max(rel(a, b));
        }
    }
    Ok(worst)
}

fn raster_invariance() -> Outcome {
    let d256 = hu_deviation(256)?;
    let d512 = hu_deviation(512)?;
    ensure(d256 < 1e-2, || format!("256x256 deviation {d256:.3e}"))?;
    ensure(d512 < d256, || format!("no improvement: {d256:.3e} at 256, {d512:.3e} at 512"))?;
    Ok(format!("h5..h7 deviation {d256:.2e} at 256, {d512:.2e} at 512"))
}

fn closed_forms() -> Outcome {
    for j in 1..=4 {
        let closed = zero_weight_closed_form(j).unwrap();
        ensure(closed == eigenvector(2 * j, 0).unwrap().to_poly(), || format!("e_{}(0)", 2 * j))?;
    }
    let mut pairs = 0;
    for n in 2..=6 {
        for s in spectrum(n).unwrap().into_iter().filter(|s| *s > 0) {
            let direct = expand_monomial(&ExponentVector::from_pairs([(sym(n, s), 1), (sym(n, -s), 1)]), n).unwrap();
            ensure(pair_product_closed_form(n, s).unwrap() == direct, || format!("pair ({n}, {s})"))?;
            pairs += 1;
        }
    }
    Ok(format!("4 zero-weight forms and {pairs} pair products exact"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome, Duration); 12] = [
        ("eigen fixtures", eigen_fixtures, Duration::from_secs(1)),
        ("exact diagonalization", exact_diagonalization, Duration::from_secs(5)),
        ("polynomial generator counts", generator_counts, Duration::from_secs(20 * 60)),
        ("symbolic invariance", symbolic_invariance, Duration::from_secs(60)),
        ("dimension and Poincare fixtures", series_fixtures, Duration::from_secs(5)),
        ("character fixture", character_fixture, Duration::from_secs(1)),
        ("rational basis", rational_tables, Duration::from_secs(1)),
        ("independence", independence, Duration::from_secs(10)),
        ("phi-beta dictionary", phi_dictionary, Duration::from_secs(10)),
        ("end-to-end invariance, point clouds", cloud_invariance, Duration::from_secs(20)),
        ("end-to-end invariance, raster", raster_invariance, Duration::from_secs(60)),
        ("closed forms", closed_forms, Duration::from_secs(10)),
    ];
    let mut failures = 0;
    for (i, (name, check, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let status = match &outcome {
            Ok(_) => "PASS",
            Err(_) => "FAIL",
        };
        let detail = match &outcome {
            Ok(s) | Err(s) => s,
        };
        if outcome.is_err() {
            failures += 1;
        }
        let slow = if elapsed > *budget { " (over time budget)" } else { "" };
        println!("criterion {:2} {status}: {name}: {detail} [{:.2?}{slow}]", i + 1, elapsed);
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
