//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs under `cargo test` with its own `main`; a failing criterion makes the
//! process exit non-zero.

use std::collections::HashSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use branchcob::cob2::{self, basis_vector, decompose, generator, in_image, invariant, realize, recompose, search_minimal};
use branchcob::fgab::{smith_normal_form, FGAbelianGroup, Homomorphism, IntMatrix};
use branchcob::homology::h2_classifying;
use branchcob::ranks::{partition_count, rank_cob, RankQuery};
use branchcob::search::{even_type_points, random_valid_data, verify_nonexistence, verify_parity};
use branchcob::{BasisCoeffs, BigInt, BranchedCoveringSet, ClassVector, Mode};

type Check = Result<String, String>;
type Criterion = (&'static str, Option<Duration>, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Check {
    for k in 2..=12 {
        let so = h2_classifying(k, Mode::Oriented).map_err(|e| e.to_string())?.result;
        ensure(so == FGAbelianGroup::free(k - 1), || format!("k = {k}, so: got {so}"))?;
        let o = h2_classifying(k, Mode::Unoriented).map_err(|e| e.to_string())?.result;
        ensure(o == FGAbelianGroup::elementary(2, k - 2), || format!("k = {k}, o: got {o}"))?;
    }
    Ok("Z^(k-1) and (Z/2)^(k-2) for k = 2..12".into())
}

/// Closed forms written out independently of the library.
fn expected_rank(n: usize, k: usize, mode: Mode) -> u128 {
    let below = |m: usize| (0..m).map(partition_count).sum::<u128>();
    let k = k as u128;
    match (n % 4, mode) {
        (0, _) => (k - 1) * below(n / 4) + partition_count(n / 4),
        (2, Mode::Oriented) => (k - 1) * below((n + 2) / 4),
        _ => 0,
    }
}

fn criterion_2() -> Check {
    let mut checked = 0;
    for n in 0..=40 {
        for k in 2..=10 {
            for mode in [Mode::Oriented, Mode::Unoriented] {
                let got = rank_cob(RankQuery { n, k, mode }).total;
                ensure(got == expected_rank(n, k, mode), || format!("n = {n}, k = {k}, {mode}: {got}"))?;
                if n % 2 == 1 {
                    ensure(got == 0, || format!("odd n = {n} gives {got}"))?;
                }
                checked += 1;
            }
        }
    }
    for k in 2..=10 {
        let r = rank_cob(RankQuery { n: 2, k, mode: Mode::Oriented }).total;
        let pipeline = h2_classifying(k, Mode::Oriented).map_err(|e| e.to_string())?.result;
        ensure(r == k as u128 - 1 && pipeline.free_rank() as u128 == r && pipeline.torsion().is_empty(), || {
            format!("rank(2, {k}, so) = {r}, pipeline {pipeline}")
        })?;
    }
    let r = rank_cob(RankQuery { n: 4, k: 2, mode: Mode::Unoriented }).total;
    ensure(r == 2, || format!("rank(4, 2, o) = {r}"))?;
    Ok(format!("{checked} rank queries"))
}

fn random_class(rng: &mut ChaCha8Rng, k: usize, mode: Mode) -> ClassVector {
    let mut entries: Vec<i64> = (2..=k).map(|_| rng.gen_range(-6..=6)).collect();
    let even_sum: i64 = (2..=k).step_by(2).map(|j| entries[j - 2]).sum();
    if even_sum.rem_euclid(2) == 1 {
        entries[0] += 1;
    }
    ClassVector::new(k, mode, entries).unwrap()
}

fn criterion_3() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut vectors = 0;
    for k in 2..=8 {
        for mode in [Mode::Oriented, Mode::Unoriented] {
            for _ in 0..1000 {
                let c = random_class(&mut rng, k, mode);
                ensure(in_image(&c), || format!("generated {c} outside the image"))?;
                let s = realize(&c).map_err(|e| e.to_string())?;
                let back = invariant(&s).map_err(|e| e.to_string())?;
                ensure(back == c, || format!("k = {k}, {mode}: realize({c}) has invariant {back}"))?;

                let first = if mode == Mode::Oriented { 2 } else { 3 };
                let lambda: Vec<i64> = (first..=k).map(|_| rng.gen_range(-6..=6)).collect();
                let lambda = BasisCoeffs::new(k, mode, lambda).unwrap();
                let again = decompose(&recompose(&lambda)).map_err(|e| e.to_string())?;
                ensure(again == lambda, || format!("k = {k}, {mode}: decompose(recompose({lambda})) = {again}"))?;
                vectors += 1;
            }
        }
    }
    let mut data = 0;
    let mut seed = 0u64;
    while data < 1000 {
        seed += 1;
        let k = 2 + (seed as usize % 6);
        let points = 2 + (seed as usize / 6) % 3;
        if k == 2 && points % 2 == 1 {
            continue;
        }
        let genus = (seed as usize / 18) % 3;
        let mode = if seed % 2 == 0 { Mode::Oriented } else { Mode::Unoriented };
        let d = random_valid_data(seed, k, genus, points, mode).map_err(|e| format!("seed {seed}: {e}"))?;
        ensure(d.is_valid(), || format!("seed {seed}: invalid datum"))?;
        let c = invariant(&BranchedCoveringSet::single(d)).map_err(|e| e.to_string())?;
        ensure(in_image(&c), || format!("seed {seed}: invariant {c} outside the image"))?;
        data += 1;
    }
    Ok(format!("{vectors} vectors, {data} random data"))
}

fn criterion_4() -> Check {
    let mut generators = 0;
    for k in 2..=8 {
        for i in 2..=k {
            for mode in [Mode::Oriented, Mode::Unoriented] {
                if mode == Mode::Unoriented && i == 2 {
                    continue;
                }
                let g = generator(i, k, mode).map_err(|e| e.to_string())?;
                let c = invariant(&g).map_err(|e| e.to_string())?;
                let expected = basis_vector(i, k, mode).unwrap();
                ensure(c == expected, || format!("generator({i}, {k}, {mode}) has invariant {c}"))?;
                generators += 1;
            }
        }
    }
    for k in 2..=5 {
        for i in 2..=k {
            let w = search_minimal(i, k, cob2::DEFAULT_SEARCH_BUDGET).map_err(|e| format!("i = {i}, k = {k}: {e}"))?;
            ensure(invariant(&w).map_err(|e| e.to_string())? == basis_vector(i, k, Mode::Oriented).unwrap(), || {
                format!("search_minimal({i}, {k}) misses g_{i}")
            })?;
            let d = &w.components[0];
            let points = d.branch_points.len();
            let want_points = if i % 2 == 1 { 1 } else { 2 };
            ensure(points == want_points, || format!("i = {i}: {points} singular points"))?;
            let want_genus = if i % 2 == 1 { (i as i64 + 1) / 2 } else { i as i64 / 2 + 1 };
            let topo = d.euler_characteristics().map_err(|e| e.to_string())?;
            let main = topo.iter().find(|t| t.sheets.contains(&0)).expect("sheet 0 lies in some component");
            let branching: i64 = d.branch_points.iter().map(|bp| bp.order() as i64 - 1).sum();
            let chi = main.sheets.len() as i64 * (2 - 2 * d.target_genus as i64) - branching;
            ensure(main.euler_characteristic == chi && main.genus == (2 - chi) / 2, || {
                format!("i = {i}: component {main:?} disagrees with chi = {chi}")
            })?;
            ensure(main.genus == want_genus, || format!("i = {i}, k = {k}: genus {}", main.genus))?;
        }
    }
    Ok(format!("{generators} generators, minimal witnesses for k <= 5"))
}

fn criterion_5() -> Check {
    let mut worst = Duration::ZERO;
    for k in 2..=5 {
        let start = Instant::now();
        let r = verify_nonexistence(k).map_err(|e| e.to_string())?;
        worst = worst.max(start.elapsed());
        ensure(r.holds(), || format!("k = {k}: {r:?}"))?;
    }
    ensure(worst < Duration::from_secs(30), || format!("slowest k took {worst:?}"))?;
    Ok(format!("k = 2..5, slowest {:.2} s", worst.as_secs_f64()))
}

fn criterion_6() -> Check {
    let mut total = 0;
    for k in 2..=4 {
        let r = verify_parity(k, 3).map_err(|e| e.to_string())?;
        if let Some(bad) = r.counterexamples.first() {
            return Err(format!("k = {k}: {} even-type points in {bad:?}", even_type_points(bad)));
        }
        total += r.total();
    }
    ensure(total > 0, || "nothing enumerated".into())?;
    Ok(format!("{total} sphere data, k <= 4, r <= 3"))
}

fn random_matrix(rng: &mut ChaCha8Rng) -> IntMatrix {
    let (m, n) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
    let rows: Vec<Vec<i64>> = (0..m).map(|_| (0..n).map(|_| rng.gen_range(-20..=20)).collect()).collect();
    IntMatrix::from_rows(&rows, n).unwrap()
}

fn snf_identities(a: &IntMatrix) -> Result<(), String> {
    let s = smith_normal_form(a);
    ensure(s.u.mul(a).mul(&s.v) == s.d, || format!("UAV != D for {a}"))?;
    ensure(s.u.mul(&s.u_inv) == IntMatrix::identity(a.rows()), || format!("U U^-1 != I for {a}"))?;
    ensure(s.v.mul(&s.v_inv) == IntMatrix::identity(a.cols()), || format!("V V^-1 != I for {a}"))?;
    ensure(s.u.determinant().abs().is_one() && s.v.determinant().abs().is_one(), || format!("not unimodular for {a}"))?;
    for i in 0..s.d.rows() {
        for j in 0..s.d.cols() {
            ensure(i == j || s.d.get(i, j).is_zero(), || format!("off-diagonal entry for {a}"))?;
        }
    }
    let diag = s.diagonal();
    ensure(diag.iter().all(|x| !x.is_negative()), || format!("negative diagonal for {a}"))?;
    for w in diag.windows(2) {
        let ok = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
        ensure(ok, || format!("divisibility fails for {a}: {diag:?}"))?;
    }
    Ok(())
}

/// Cyclic orders >= 2 with product at most 512.
fn random_finite_orders(rng: &mut ChaCha8Rng) -> Vec<i64> {
    let mut orders = Vec::new();
    let mut product = 1;
    for _ in 0..rng.gen_range(1..=4) {
        let d = rng.gen_range(2..=16);
        if product * d <= 512 {
            product *= d;
            orders.push(d);
        }
    }
    orders
}

fn random_homomorphism(rng: &mut ChaCha8Rng) -> Homomorphism {
    let source = random_finite_orders(rng);
    let target = random_finite_orders(rng);
    let rows: Vec<Vec<i64>> = target
        .iter()
        .map(|&t| {
            source
                .iter()
                .map(|&d| {
                    let step = t / t.gcd(&d);
                    step * rng.gen_range(0..t.gcd(&d)) + t * rng.gen_range(-1..=1)
                })
                .collect()
        })
        .collect();
    Homomorphism::from_i64(&source, &target, &rows).unwrap()
}

fn elements(orders: &[BigInt]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for d in orders {
        let d = d.to_i64().unwrap();
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..d).map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

fn image_of(h: &Homomorphism, x: &[i64]) -> Vec<i64> {
    let x: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
    h.apply(&x)
        .iter()
        .zip(h.target_orders())
        .map(|(y, t)| y.mod_floor(t).to_i64().unwrap())
        .collect()
}

fn scaled(x: &[i64], n: i64, orders: &[BigInt]) -> Vec<i64> {
    x.iter().zip(orders).map(|(&v, d)| (v * n).rem_euclid(d.to_i64().unwrap())).collect()
}

fn killed(group: &FGAbelianGroup, n: i64) -> i64 {
    group.count_killed_by(&BigInt::from(n)).unwrap().to_i64().unwrap()
}

fn brute_force_check(h: &Homomorphism) -> Result<(), String> {
    let src = h.source_orders();
    let tgt = h.target_orders();
    let source = elements(src);
    let target = elements(tgt);
    let zero_t = vec![0i64; tgt.len()];
    let kernel: Vec<&Vec<i64>> = source.iter().filter(|x| image_of(h, x) == zero_t).collect();
    let image: HashSet<Vec<i64>> = source.iter().map(|x| image_of(h, x)).collect();
    let k = h.kernel();
    let (im, coker) = (h.image(), h.cokernel());
    for (g, _) in &k.generators {
        let y = h.apply(g);
        ensure(y.iter().zip(tgt).all(|(v, t)| v.mod_floor(t).is_zero()), || "kernel generator not in kernel".into())?;
    }
    let exponent = (source.len().max(target.len())) as i64;
    for n in 1..=exponent {
        let kb = kernel.iter().filter(|x| scaled(x, n, src).iter().all(|&v| v == 0)).count() as i64;
        let ib = image.iter().filter(|y| scaled(y, n, tgt).iter().all(|&v| v == 0)).count() as i64;
        let cb = target.iter().filter(|y| image.contains(&scaled(y, n, tgt))).count() as i64 / image.len() as i64;
        ensure(killed(&k.group, n) == kb, || format!("kernel {}: {} killed by {n}, brute force {kb}", k.group, killed(&k.group, n)))?;
        ensure(killed(&im, n) == ib, || format!("image {im}: killed by {n} differs from {ib}"))?;
        ensure(killed(&coker, n) == cb, || format!("cokernel {coker}: killed by {n} differs from {cb}"))?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        snf_identities(&random_matrix(&mut rng))?;
    }
    for _ in 0..100 {
        let h = random_homomorphism(&mut rng);
        brute_force_check(&h).map_err(|e| format!("{e} (matrix {})", h.matrix()))?;
    }
    Ok("10000 SNFs, 100 homomorphisms".into())
}

fn count_partitions(n: usize, max_part: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    (1..=max_part.min(n)).map(|p| count_partitions(n - p, p)).sum()
}

fn criterion_8() -> Check {
    for i in 0..=40 {
        let brute = count_partitions(i, i);
        ensure(partition_count(i) == brute, || format!("pi({i}) = {} but enumeration gives {brute}", partition_count(i)))?;
    }
    ensure(
        (partition_count(0), partition_count(4), partition_count(10)) == (1, 5, 42),
        || "anchor values".into(),
    )?;
    Ok("pi(0..=40)".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("group computation", Some(Duration::from_secs(5)), criterion_1),
        ("rank cross-validation", None, criterion_2),
        ("invariant completeness", Some(Duration::from_secs(10)), criterion_3),
        ("generators", None, criterion_4),
        ("non-existence oracle", None, criterion_5),
        ("parity oracle", None, criterion_6),
        ("algebra engine", None, criterion_7),
        ("partition oracle", None, criterion_8),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, (name, limit, check)) in criteria.iter().enumerate() {
        let n = n + 1;
        if !filter.is_empty() && !filter.iter().any(|f| name.contains(f.as_str()) || *f == n.to_string()) {
            continue;
        }
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(limit)) if elapsed > *limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("criterion {n} ({name}): PASS [{:.2} s] {detail}", elapsed.as_secs_f64()),
            Err(why) => {
                failed += 1;
                println!("criterion {n} ({name}): FAIL [{:.2} s] {why}", elapsed.as_secs_f64());
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
