//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use cyclic_moduli::{
    count_fibre, decompose, enumerate_fibre, k1_fibre_count, to_coeffs, AdjustedQuiver, CoeffForm, CyclicQuiver,
    CyclicRep, Divisor, K1FibreCount, K1Quiver, K1Rep, ProjPoint, Rational, Residual, Section,
};
use cyclic_moduli_cli::{parse_section, run, Command, Options};
use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde_json::Value;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn within(limit: Duration, start: Instant) -> Result<Duration, String> {
    let took = start.elapsed();
    if took < limit {
        Ok(took)
    } else {
        Err(format!("took {took:?}, limit {limit:?}"))
    }
}

fn cli_json(command: Command, spec: &str) -> Result<Value, String> {
    let out = run(&command, spec, &Options { json: true });
    if out.code != 0 {
        return Err(format!("exit {}: {}", out.code, out.stderr.trim()));
    }
    serde_json::from_str(&out.stdout).map_err(|e| e.to_string())
}

// --- generators and oracles -------------------------------------------------

fn nonzero_rat(rng: &mut StdRng) -> Rational {
    loop {
        let r = Rational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=4).into());
        if r != q(0) {
            return r;
        }
    }
}

fn point(rng: &mut StdRng) -> ProjPoint {
    if rng.gen_ratio(1, 8) {
        ProjPoint::Infinity
    } else {
        ProjPoint::from_int(rng.gen_range(-3..=3))
    }
}

fn admissible_quiver(rng: &mut StdRng, n: usize, t: i64) -> CyclicQuiver {
    let total = n as i64 * t;
    let mut cuts: Vec<i64> = (0..n - 1).map(|_| rng.gen_range(0..=total)).collect();
    cuts.sort_unstable();
    cuts.push(total);
    let mut degrees = vec![rng.gen_range(-3i64..=3)];
    let mut prev = 0;
    for &c in &cuts[..n - 1] {
        let last = *degrees.last().unwrap();
        degrees.push(last + (c - prev) - t);
        prev = c;
    }
    CyclicQuiver::new(t, degrees).unwrap().reindex_canonical().unwrap()
}

fn small_quiver(rng: &mut StdRng) -> CyclicQuiver {
    loop {
        let n = rng.gen_range(2..=5);
        let t = rng.gen_range(0..=4);
        if n as i64 * t <= 10 {
            return admissible_quiver(rng, n, t);
        }
    }
}

fn random_rep(rng: &mut StdRng, quiver: &CyclicQuiver, zero_odds: f64) -> CyclicRep {
    let maps = quiver
        .map_degrees()
        .iter()
        .map(|&d| {
            if d < 0 || rng.gen_bool(zero_odds) {
                Section::zero(d)
            } else {
                let pts: Vec<ProjPoint> = (0..d).map(|_| point(rng)).collect();
                Section::new(nonzero_rat(rng), Divisor::from_points(pts)).unwrap()
            }
        })
        .collect();
    CyclicRep::new(quiver.clone(), maps).unwrap()
}

/// Every arrow-closed proper coordinate subset, checked against the slope.
fn naive_stable(rep: &CyclicRep) -> bool {
    let quiver = rep.quiver();
    let n = quiver.n();
    let total = quiver.total_degree();
    (1u32..(1 << n) - 1).all(|mask| {
        let inside = |i: usize| mask >> i & 1 == 1;
        let closed = (0..n).all(|i| !inside(i) || rep.maps()[i].is_zero() || inside((i + 1) % n));
        let deg: i64 = (0..n).filter(|&i| inside(i)).map(|i| quiver.degrees()[i]).sum();
        !closed || (n as i64 * deg) < i64::from(mask.count_ones()) * total
    })
}

/// Distinct ordered splittings found by placing each point of `d` in turn.
fn brute_splittings(d: &Divisor, sizes: &[usize]) -> BTreeSet<Vec<Divisor>> {
    fn go(pts: &[ProjPoint], sizes: &[usize], cur: &mut Vec<Vec<ProjPoint>>, out: &mut BTreeSet<Vec<Divisor>>) {
        let Some((p, rest)) = pts.split_first() else {
            out.insert(cur.iter().map(|v| Divisor::from_points(v.iter().cloned())).collect());
            return;
        };
        for i in 0..sizes.len() {
            if cur[i].len() < sizes[i] {
                cur[i].push(p.clone());
                go(rest, sizes, cur, out);
                cur[i].pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    go(&d.expanded(), sizes, &mut vec![Vec::new(); sizes.len()], &mut out);
    out
}

fn form(rng: &mut StdRng, degree: i64, nonzero: bool) -> CoeffForm {
    loop {
        let coeffs = (0..=degree).map(|_| q(rng.gen_range(-5..=5))).collect();
        let f = CoeffForm::new(degree, coeffs).unwrap();
        if !nonzero || !f.is_zero() {
            return f;
        }
    }
}

fn k1_quiver(rng: &mut StdRng, max_k: usize) -> K1Quiver {
    loop {
        let k = rng.gen_range(1..=max_k);
        let mut a = vec![rng.gen_range(-1i64..=2)];
        for _ in 1..k {
            let last = *a.last().unwrap();
            a.push(last - rng.gen_range(1..=2));
        }
        if let Ok(qk) = K1Quiver::new(rng.gen_range(1..=5), a, rng.gen_range(-4..=0)) {
            return qk;
        }
    }
}

// --- criteria ----------------------------------------------------------------

fn example_fibre() -> Outcome {
    let start = Instant::now();
    let spec = "cyclic t=4 nodes=(0,-1)";
    let a = cli_json(Command::Analyze, spec)?;
    let d = &a["descriptor"];
    ensure!(d["sheet_count"] == 56, "eta = {}", d["sheet_count"]);
    ensure!(d["nilcone_dims"] == serde_json::json!([3]), "nilcone = {}", d["nilcone_dims"]);
    ensure!(d["bundle_rank"] == 6, "bundle rank = {}", d["bundle_rank"]);

    let gamma_text = "1*(0:1)(1:1)(2:1)(3:1)(4:1)(5:1)(6:1)(7:1)";
    let f = cli_json(Command::Fibre { gamma: gamma_text.into() }, spec)?;
    let quiver = CyclicQuiver::new(4, vec![0, -1]).unwrap();
    let gamma = Section::monic((0..8).map(ProjPoint::from_int));
    let points = f["points"].as_array().ok_or("points missing")?;
    ensure!(f["count"] == 56 && points.len() == 56, "fibre has {} points", points.len());
    let mut reps = Vec::new();
    for p in points {
        let maps = p["phis"]
            .as_array()
            .ok_or("phis missing")?
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let lit = parse_section(s.as_str().unwrap_or_default()).map_err(|e| e.to_string())?;
                lit.to_section(quiver.map_degree(i)).map_err(|e| e.to_string())
            })
            .collect::<Result<Vec<_>, _>>()?;
        let rep = CyclicRep::new(quiver.clone(), maps).map_err(|e| e.to_string())?;
        ensure!(rep.is_stable(), "unstable point {p}");
        ensure!(rep.hitchin_image() == gamma, "point {p} lies over {}", rep.hitchin_image());
        reps.push(rep);
    }
    for (i, r) in reps.iter().enumerate() {
        for s in &reps[..i] {
            ensure!(!r.equivalent(s).unwrap(), "equivalent points {r:?} and {s:?}");
        }
    }
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!("eta 56, nilcone [P^3], bundle rank 6, 56 stable pairwise-inequivalent points over gamma ({took:?})"))
}

fn adjusted_factor() -> Outcome {
    let f = AdjustedQuiver::new(4, 0, -1, 2).map_err(|e| e.to_string())?;
    let count = f.fibre_count(&[1; 6]).map_err(|e| e.to_string())?;
    ensure!(count == BigUint::from(6u32), "fibre count {count}");
    ensure!(f.nilcone_dim() == 1, "nilcone P^{}", f.nilcone_dim());
    ensure!(f.residual_degree() == 6, "residual degree {}", f.residual_degree());
    Ok("reduced (0,-1) t=4 factor: 6 points over 6 distinct zeros, nilcone P^1".into())
}

fn k1_example() -> Outcome {
    let start = Instant::now();
    let spec = "k1 t=5 split=(1,0) tail=-2";
    let qk = K1Quiver::new(5, vec![1, 0], -2).unwrap();
    ensure!(qk.reduction_amounts() == vec![0, 2], "amounts {:?}", qk.reduction_amounts());
    ensure!(qk.odd_degree(1) + 1 - 2 == 2, "phi_3 keeps {} coefficients", qk.odd_degree(1) - 1);
    let d = decompose(&qk).map_err(|e| e.to_string())?;
    ensure!(d.cover_count == BigUint::from(8u32), "cover count {}", d.cover_count);
    ensure!(d.special_locus_dim == 1, "special locus P^{}", d.special_locus_dim);
    let zero = k1_fibre_count(&qk, &Residual::Zero).map_err(|e| e.to_string())?;
    ensure!(zero == K1FibreCount::SpecialLocus { projective_dim: 1 }, "zero residual gives {zero:?}");
    let cli = cli_json(Command::Decompose, spec)?;
    ensure!(cli["cover_count"] == 8 && cli["special_locus_dim"] == 1, "cli decompose {cli}");

    let monic = |xs: &[i64]| to_coeffs(&Section::monic(xs.iter().map(|&x| ProjPoint::from_int(x))));
    let rep = K1Rep::from_interleaved(
        qk.clone(),
        vec![monic(&[1, 2]), monic(&[0, 1, 2, 3, 4, 5, 6, 7]), monic(&[-1, 3, 5]), monic(&[2, 2, 3, 9, 10, 11, 12])],
    )
    .map_err(|e| e.to_string())?;
    let red = rep.reduce().map_err(|e| e.to_string())?;
    ensure!(red.chart_shift == q(0), "needed chart shift {}", red.chart_shift);
    let phi3 = &red.rep.odd_maps()[1];
    ensure!(phi3.coeff(3) == q(0) && phi3.coeff(2) == q(0), "top of phi_3 not cleared: {phi3}");
    ensure!(phi3.coeff(1) != q(0) && phi3.coeff(0) != q(0), "more than 2 coefficients cleared: {phi3}");
    ensure!(red.rep.hitchin_image() == rep.hitchin_image(), "Hitchin image changed");
    let (_, _, psi) = &red.multipliers[0];
    let rebuilt = rep.odd_maps()[1].add(&psi.mul(&rep.odd_maps()[0])).unwrap();
    ensure!(&rebuilt == phi3, "multiplier does not rebuild phi_3");

    let rep_text = "phi1=(1:1)(2:1); phi2=(0:1)(1:1)(2:1)(3:1)(4:1)(5:1)(6:1)(7:1); \
                    phi3=(-1:1)(3:1)(5:1); phi4=(2:1)^2(3:1)(9:1)(10:1)(11:1)(12:1)";
    let cli = cli_json(Command::Reduce { rep: rep_text.into() }, spec)?;
    ensure!(cli["maps"][2] == phi3.to_string().as_str(), "cli phi_3 = {}", cli["maps"][2]);
    ensure!(cli["hitchin_preserved"] == true, "cli reports Hitchin image changed");
    let took = within(Duration::from_secs(1), start)?;
    Ok(format!(
        "amounts (0,2), cover 8, special locus P^1, reduced phi_3 = {phi3}, Hitchin image preserved ({took:?})"
    ))
}

fn sheet_count_law() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    let mut repeated = 0;
    for trial in 0..100 {
        let quiver = small_quiver(&mut rng);
        let nt = quiver.n() * quiver.twist() as usize;
        let mut pool: Vec<i64> = (-30..=30).collect();
        pool.shuffle(&mut rng);
        let distinct = Divisor::from_points(pool[..nt].iter().map(|&x| ProjPoint::from_int(x)));
        let gamma = Section::new(nonzero_rat(&mut rng), distinct).unwrap();
        let fibre = enumerate_fibre(&quiver, &gamma).map_err(|e| e.to_string())?;
        ensure!(
            BigUint::from(fibre.len()) == quiver.eta(),
            "trial {trial}: {quiver:?} has {} points, eta {}",
            fibre.len(),
            quiver.eta()
        );

        let zeros = Divisor::from_points((0..nt).map(|_| point(&mut rng)));
        if zeros.support_len() < nt {
            repeated += 1;
        }
        let gamma = Section::new(nonzero_rat(&mut rng), zeros.clone()).unwrap();
        let fibre = enumerate_fibre(&quiver, &gamma).map_err(|e| e.to_string())?;
        let counted = count_fibre(&quiver, &zeros.profile()).map_err(|e| e.to_string())?;
        let sizes: Vec<usize> = quiver.map_degrees().iter().map(|&d| d as usize).collect();
        let oracle = brute_splittings(&zeros, &sizes);
        ensure!(
            BigUint::from(fibre.len()) == counted && oracle.len() == fibre.len(),
            "trial {trial}: enumerate {}, count {counted}, oracle {}",
            fibre.len(),
            oracle.len()
        );
    }
    Ok(format!("100 quivers: |fibre| = eta on distinct roots; enumerate = count = oracle ({repeated} with repeated roots)"))
}

fn stability_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    let mut unstable = 0;
    for trial in 0..3000 {
        let n = rng.gen_range(2..=6);
        let t = rng.gen_range(0..=3);
        let degrees = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
        let quiver = CyclicQuiver::new(t, degrees).unwrap();
        let rep = random_rep(&mut rng, &quiver, 0.25);
        let stable = rep.is_stable();
        ensure!(stable == naive_stable(&rep), "trial {trial}: disagreement on {rep:?}");
        ensure!(!stable || rep.zero_count() <= 1, "trial {trial}: stable with {} zero maps", rep.zero_count());
        unstable += usize::from(!stable);
    }
    Ok(format!("3000 reps with n <= 6 agree with the power-set scan ({unstable} unstable)"))
}

fn torus_suite() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0006);
    for trial in 0..500 {
        let quiver = small_quiver(&mut rng);
        let mut rep = random_rep(&mut rng, &quiver, 0.0);
        if rng.gen_bool(0.25) {
            rep = rep.flow_limit();
        }
        let scalars: Vec<Rational> = (1..quiver.n()).map(|_| nonzero_rat(&mut rng)).collect();
        let moved = rep.torus_act(&scalars).map_err(|e| e.to_string())?;
        ensure!(moved.canonical_form() == rep.canonical_form(), "trial {trial}: canonical form moved");
        ensure!(moved.hitchin_image() == rep.hitchin_image(), "trial {trial}: Hitchin image moved");
        ensure!(moved.is_stable() == rep.is_stable(), "trial {trial}: stability changed");
    }
    Ok("500 torus actions preserve canonical form, Hitchin image and stability".into())
}

fn determinant_check() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0007);
    let mut exponents = BTreeSet::new();
    for trial in 0..300 {
        let qk = k1_quiver(&mut rng, 3);
        let odd = (0..qk.k()).map(|i| form(&mut rng, qk.odd_degree(i), true)).collect();
        let even = (0..qk.k()).map(|i| form(&mut rng, qk.even_degree(i), false)).collect();
        let rep = K1Rep::new(qk.clone(), odd, even).map_err(|e| e.to_string())?;
        let report = rep.char_poly();
        let r = report.rank;
        let sum = rep.sum_of_products();
        let Some(e) = report.subleading_exponent else {
            ensure!(sum.is_zero(), "trial {trial}: no subleading term but sum {sum}");
            continue;
        };
        let coeff = &report.coefficients[e];
        let mut padded = coeff.iter().map(|c| -c).collect::<Vec<_>>();
        padded.resize(sum.coeffs().len(), q(0));
        ensure!(padded == sum.coeffs(), "trial {trial}: lambda^{e} coefficient is not -sum of products");
        exponents.insert(r - e);
    }
    ensure!(exponents.len() == 1, "exponent varies: r - {exponents:?}");
    let gap = exponents.first().copied().unwrap_or_default();
    Ok(format!("300 reps with k <= 3: det(lambda - Phi) = lambda^r - (sum phi phi) lambda^(r-{gap}); observed exponent r-{gap}"))
}

fn dimension_identities() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_0008);
    for trial in 0..200 {
        let n = rng.gen_range(2..=7);
        let t = rng.gen_range(0..=6);
        let quiver = admissible_quiver(&mut rng, n, t);
        let d = quiver.moduli_descriptor();
        ensure!(d.moduli_dim == d.rep_dim - (n as i64 - 1), "trial {trial}: {d:?}");
        ensure!(d.nilcone_dims.iter().sum::<i64>() + d.bundle_rank == d.moduli_dim, "trial {trial}: {d:?}");
    }
    Ok("200 quivers: moduli_dim = rep_dim - (n-1) = sum nilcone dims + bundle rank".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("cyclic t=4 nodes=(0,-1) descriptor and fibre", example_fibre),
        ("adjusted (1,1) factor count and nilcone", adjusted_factor),
        ("k1 t=5 split=(1,0) tail=-2 reduction and decomposition", k1_example),
        ("sheet-count law", sheet_count_law),
        ("stability against power-set scan", stability_suite),
        ("torus and orbit invariance", torus_suite),
        ("determinant cross-check", determinant_check),
        ("dimension identities", dimension_identities),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("PASS [{}] {name}: {detail}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL [{}] {name}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
