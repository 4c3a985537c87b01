//! Acceptance criteria 1 to 7. Runs without the libtest harness so that each
//! criterion prints exactly one PASS/FAIL line; any failure exits nonzero.

use std::collections::BTreeSet;
use std::time::Instant;

use negacyclic::code::{
    classify, construct_code, default_alpha, search, CodeReport, CodeSpec, SearchConfig, SpecFile,
};
use negacyclic::factor::{admissible_lengths, factor_xn_plus_one, root_exponents, Coset};
use negacyclic::golden::{diff, golden_rows_for};
use negacyclic::oracle::{
    dual_basis, dual_ideal_checks, enumerate_s, true_min_distance, Subspace, DEFAULT_BUDGET,
};
use negacyclic::weyl::{simulate, DEFAULT_CAP};
use negacyclic::{ExtField, Poly, PrimeModulus, RingElem};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn worked_spec() -> CodeSpec {
    let p = pm(3);
    let fp = ExtField::prime(p);
    let f9 = ExtField::new(p, 2).unwrap();
    let g = Poly::parse(&fp, "X^2+1").unwrap();
    let h = Poly::parse(&f9, "X^4+(2e+1)X^2+1").unwrap();
    construct_code(p, 10, 2, 1, &g, &h, default_alpha(p, 2).unwrap()).unwrap()
}

fn poly_set(field: &ExtField, texts: &[&str]) -> BTreeSet<String> {
    texts
        .iter()
        .map(|t| Poly::parse(field, t).unwrap().to_string())
        .collect()
}

fn criterion_1() -> Outcome {
    let p = pm(3);
    let fs1 = factor_xn_plus_one(p, 1, 10).unwrap();
    let got1: BTreeSet<String> = fs1.factors().iter().map(|f| f.poly.to_string()).collect();
    let want1 = poly_set(fs1.field(), &["X^2+1", "X^4+X^3+2X+1", "X^4+2X^3+X+1"]);

    let fs2 = factor_xn_plus_one(p, 2, 10).unwrap();
    let got2: BTreeSet<String> = fs2.factors().iter().map(|f| f.poly.to_string()).collect();
    let quadratics = poly_set(
        fs2.field(),
        &[
            "X^2+(e+2)X+2",
            "X^2+(2e+2)X+2",
            "X^2+(e+1)X+2",
            "X^2+(2e+1)X+2",
        ],
    );
    let eta_ok = fs2.field().defining_polynomial().to_string() == "X^2+1";
    let passed = got1 == want1 && quadratics.is_subset(&got2) && got2.len() == 6 && eta_ok;
    outcome(
        passed,
        format!(
            "F_3: {} factors; F_9: {} factors, quadratics present",
            got1.len(),
            got2.len()
        ),
    )
}

fn criterion_2() -> Outcome {
    let spec = worked_spec();
    let r = classify(&spec).unwrap();
    let fs = factor_xn_plus_one(pm(3), 2, 10).unwrap();
    let target = Poly::parse(fs.field(), "X^2+(e+2)X+2").unwrap();
    let labels = fs.factors()[fs.index_of(&target).unwrap()].coset.clone();
    let eh = Coset::from_members(
        root_exponents(fs.frame(), spec.h())
            .unwrap()
            .into_iter()
            .collect(),
    );
    // β is some root of X^2+(e+2)X+2; relabel exponents so that root is β^1
    let pair = labels.members().iter().any(|&u| {
        let inv = (1..20u64).find(|v| v * u % 20 == 1).unwrap();
        let s = eh.scaled(inv, 20);
        s.contains(9) && s.contains(11)
    });
    let passed = (r.n, r.k_dim, r.d_bch, r.linear) == (10, 2, 3, true)
        && spec.g().degree() == Some(2)
        && pair;
    outcome(
        passed,
        format!(
            "[[{},{},{}]]_3 linear={} roots of h {eh}, pair 9,11 under relabeling: {pair}",
            r.n, r.k_dim, r.d_bch, r.linear
        ),
    )
}

fn full_search(p: u64) -> Vec<CodeReport> {
    let n_max = golden_rows_for(p as u32)
        .iter()
        .map(|g| g.row.n)
        .max()
        .unwrap();
    search(&SearchConfig::new(p, n_max)).unwrap().reports
}

fn criterion_3(searches: &[(u64, Vec<CodeReport>)]) -> Outcome {
    let mut matched = 0;
    let mut missing = Vec::new();
    for (p, reports) in searches {
        let rows: Vec<_> = reports.iter().map(|r| r.row()).collect();
        let d = diff(&rows, &golden_rows_for(*p as u32));
        matched += d.matched.len();
        missing.extend(d.missing.iter().map(|g| format!("{:?}", g.row)));
    }
    outcome(
        missing.is_empty() && matched == 39,
        format!("{matched}/39 rows matched; missing {missing:?}"),
    )
}

fn criterion_4() -> Outcome {
    let spec = worked_spec();
    let d = true_min_distance(&spec, DEFAULT_BUDGET).unwrap();
    let s = enumerate_s(&spec, DEFAULT_BUDGET).unwrap();
    let dual = Subspace::span(3, 10, &dual_basis(&spec).unwrap());
    let contained = s.space.basis().iter().all(|b| dual.contains(b));
    let product_ok = d.s_size as u64 * d.dual_size as u64 == 3u64.pow(20);
    let sizes_ok = d.s_size == 6561 && d.dual_size == 531441;
    let dist_ok = d.true_distance.is_some_and(|x| x >= 3);
    outcome(
        contained && product_ok && sizes_ok && dist_ok,
        format!(
            "|S|={} |S^perp|={} S in S^perp: {contained}, min weight of S^perp minus S = {:?}",
            d.s_size, d.dual_size, d.true_distance
        ),
    )
}

/// Exact form of the dual-ideal statement for duals small enough to list.
fn exhaustive_dual_ideal(spec: &CodeSpec, budget: u64) -> Option<bool> {
    let p = spec.p().get();
    let n = spec.n();
    let fk = spec.coefficient_field();
    let dual = Subspace::span(p, n, &dual_basis(spec).unwrap());
    let mut all = true;
    let res = dual.for_each(budget, |v| {
        if !all {
            return;
        }
        let coeffs: Vec<_> = (0..n)
            .map(|j| fk.from_coords(&[v[j], v[n + j]]).unwrap())
            .collect();
        if !spec.h().divides(&Poly::new(&fk, coeffs)).unwrap() {
            all = false;
        }
    });
    res.ok()?;
    // the ideal <h> has p^{2(n - deg h)} elements
    Some(all && dual.dim() == 2 * (n - spec.h().degree_or_zero()))
}

fn criterion_5(searches: &[(u64, Vec<CodeReport>)]) -> Outcome {
    let mut sampled = 0;
    let mut exhaustive = 0;
    let mut failures = Vec::new();
    for (_, reports) in searches {
        for r in reports.iter().filter(|r| r.linear) {
            let checks = dual_ideal_checks(&r.spec, 16, r.n as u64).unwrap();
            sampled += 1;
            if let Some(c) = checks.iter().find(|c| !c.passed) {
                failures.push(format!("p={} n={} h={}: {}", r.p, r.n, r.spec.h(), c.name));
            }
            match exhaustive_dual_ideal(&r.spec, 1 << 20) {
                Some(true) => exhaustive += 1,
                Some(false) => failures.push(format!("p={} n={}: exhaustive", r.p, r.n)),
                None => {}
            }
        }
    }
    outcome(
        failures.is_empty() && sampled > 0,
        format!("{sampled} linear specs sampled, {exhaustive} listed exhaustively; failures {failures:?}"),
    )
}

/// Admissible specs of one length, taking every allowed k including 1.
fn small_specs(p: u64, n: usize) -> Vec<CodeSpec> {
    let mut cfg = SearchConfig::new(p, n);
    cfg.t_cap = Some(6);
    cfg.allow_k1 = true;
    search(&cfg)
        .unwrap()
        .reports
        .into_iter()
        .filter(|r| r.n == n)
        .map(|r| r.spec)
        .collect()
}

fn criterion_6() -> Outcome {
    let mut lines = Vec::new();
    let mut passed = true;
    for (p, n) in [(3u64, 4usize), (5, 2)] {
        let specs = small_specs(p, n);
        if specs.is_empty() {
            passed = false;
        }
        for spec in &specs {
            let rep = simulate(spec, DEFAULT_CAP, 11).unwrap();
            let ok = rep.passed()
                && rep.idempotence < 1e-9
                && rep.hermiticity < 1e-9
                && (rep.trace_re - rep.expected_trace).abs() < 1e-6
                && rep.negacyclic.commutator < 1e-9;
            passed &= ok;
            lines.push(format!(
                "(p={p},n={n},k={},g={}) trace {:.6} vs {}",
                spec.k(),
                spec.g(),
                rep.trace_re,
                rep.expected_trace
            ));
        }
    }
    outcome(passed, lines.join("; "))
}

/// The `(3, 4)` example with `k = 2` does not satisfy the length condition.
/// Report what validation says and what the simulator sees when forced.
fn diagnostic_non_admissible() -> String {
    let fp = ExtField::prime(pm(3));
    let f9 = ExtField::new(pm(3), 2).unwrap();
    let g = Poly::one(&fp);
    let h = Poly::parse(&f9, "X^2+2e").unwrap();
    let verdict = match construct_code(pm(3), 4, 2, 1, &g, &h, default_alpha(pm(3), 2).unwrap()) {
        Ok(_) => "accepted".to_string(),
        Err(e) => format!("rejected ({e})"),
    };
    let file = SpecFile {
        format_version: 1,
        p: 3,
        n: 4,
        k: 2,
        m: 1,
        alpha: default_alpha(pm(3), 2).unwrap() as u64,
        modulus: "X^2+1".into(),
        g: "1".into(),
        h: "X^2+2e".into(),
        a: None,
    };
    let forced = match file.to_unchecked() {
        Ok(spec) => match simulate(&spec, DEFAULT_CAP, 11) {
            Ok(rep) => format!(
                "forced simulation: trace {:.6}, idempotence {:.2e}, all checks {}",
                rep.trace_re,
                rep.idempotence,
                rep.passed()
            ),
            Err(e) => format!("forced simulation refused ({e})"),
        },
        Err(e) => format!("CRT solution for a rejected ({e})"),
    };
    format!("(3,4,k=2,g=1,h=X^2+2e) {verdict}; {forced}")
}

fn criterion_7(searches: &[(u64, Vec<CodeReport>)]) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures: Vec<String> = Vec::new();
    let mut count = 0;
    for (_, reports) in searches {
        let mut pool: Vec<&CodeReport> = reports.iter().collect();
        pool.shuffle(&mut rng);
        for r in pool.into_iter().take(80) {
            count += 1;
            let spec = &r.spec;
            let n = spec.n();
            let tag = format!("p={} n={} g={} h={}", r.p, n, spec.g(), spec.h());
            let (g, f) = spec.pair().unwrap();
            // g(X) f(X^-1) = f(X) g(X^-1) with f = a g
            if &g * &f.substitute_inv() != &f * &g.substitute_inv() {
                failures.push(format!("isotropy: {tag}"));
            }
            let a = RingElem::from_poly(spec.a(), n).unwrap();
            if a.substitute_neg() != a || a.substitute_inv() != a {
                failures.push(format!("a symmetry: {tag}"));
            }
            if !spec.a().field().same(&spec.prime_field()) {
                failures.push(format!("a not over F_p: {tag}"));
            }
            if spec.g().degree_or_zero() + spec.k() * spec.h().degree_or_zero() != n {
                failures.push(format!("degree count: {tag}"));
            }
            // a = 1 mod g and a = σ^{i+1}(αη) mod σ^i(h) over F_{p^k}
            let fk = spec.coefficient_field();
            let a_k = spec.a().lift_prime_to(&fk).unwrap();
            let g_k = spec.g().lift_prime_to(&fk).unwrap();
            if !g_k.is_one() && !a_k.rem(&g_k).unwrap().is_one() {
                failures.push(format!("a mod g: {tag}"));
            }
            let alpha_eta = &fk.from_int(spec.alpha() as i64) * &fk.eta();
            for i in 0..spec.k() {
                let hi = spec.h().frobenius(i);
                if hi.is_one() {
                    continue;
                }
                let want = Poly::constant(alpha_eta.frobenius(i + 1)).rem(&hi).unwrap();
                if a_k.rem(&hi).unwrap() != want {
                    failures.push(format!("a mod sigma^{i}(h): {tag}"));
                }
            }
        }
    }
    let even = even_degree_property();
    let subst = substitution_identity(&mut rng);
    failures.extend(even.clone());
    failures.extend(subst.clone());
    outcome(
        failures.is_empty() && count >= 200,
        format!(
            "{count} specs; even-degree failures {}; substitution failures {}; {:?}",
            even.len(),
            subst.len(),
            failures.iter().take(5).collect::<Vec<_>>()
        ),
    )
}

/// Non-linear factors of `X^n+1` over `F_p` have even degree; linear ones are
/// `X ∓ α` with `α² = -1`, possible only for `p ≡ 1 mod 4`.
fn even_degree_property() -> Vec<String> {
    let mut failures = Vec::new();
    for p in [3u64, 5, 7] {
        for n in (1..=100u64).filter(|n| n % p != 0) {
            if admissible_lengths(pm(p), n).unwrap().is_none() {
                continue;
            }
            let fs = factor_xn_plus_one(pm(p), 1, n).unwrap();
            for f in fs.factors() {
                let d = f.poly.degree_or_zero();
                if d == 1 {
                    let root = -&f.poly.coeff(0);
                    if p % 4 != 1 || !(&(&root * &root) + &fs.field().one()).is_zero() {
                        failures.push(format!("p={p} n={n}: linear factor {}", f.poly));
                    }
                } else if d % 2 == 1 {
                    failures.push(format!("p={p} n={n}: odd factor {}", f.poly));
                }
            }
        }
    }
    failures
}

/// `u^{p^t} = σ^t(u)(-X^{-1})` in `R`, computed by repeated `p`-th powers.
fn substitution_identity(rng: &mut ChaCha8Rng) -> Vec<String> {
    let mut failures = Vec::new();
    let cases = [
        (3u64, 10usize, 2usize),
        (3, 4, 1),
        (3, 28, 3),
        (5, 26, 2),
        (5, 6, 1),
        (7, 10, 2),
        (7, 50, 1),
    ];
    for &(p, n, k) in &cases {
        let t = admissible_lengths(pm(p), n as u64).unwrap().unwrap();
        for field in [ExtField::prime(pm(p)), ExtField::new(pm(p), k).unwrap()] {
            let q = num_traits::ToPrimitive::to_u128(&field.order()).unwrap();
            for _ in 0..6 {
                let coeffs = (0..n)
                    .map(|_| field.element_from_index(rng.gen_range(0..q)))
                    .collect();
                let u = RingElem::from_poly(&Poly::new(&field, coeffs), n).unwrap();
                let mut lhs = u.clone();
                for _ in 0..t {
                    lhs = lhs.pow(p);
                }
                let rhs = u.frobenius(t as usize).substitute_inv().substitute_neg();
                if lhs != rhs {
                    failures.push(format!("p={p} n={n} over degree {}: {u}", field.degree()));
                }
                let direct = p.checked_pow(t as u32).map(|q| u.substitute_neg().pow(q));
                if field.degree() == 1 && direct.is_some_and(|d| d != u.substitute_inv()) {
                    failures.push(format!("p={p} n={n}: u(X^-1) != u(-X)^(p^t)"));
                }
            }
        }
    }
    failures
}

fn main() {
    let mut all = true;
    let mut report = |id: u32, name: &str, start: Instant, o: Outcome| {
        all &= o.passed;
        println!(
            "criterion {id} ({name}): {} [{:.2}s] {}",
            if o.passed { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
    };
    let t = Instant::now();
    report(1, "factorization goldens", t, criterion_1());
    let t = Instant::now();
    report(2, "worked example", t, criterion_2());

    let t = Instant::now();
    let searches: Vec<(u64, Vec<CodeReport>)> =
        [3u64, 5, 7].iter().map(|&p| (p, full_search(p))).collect();
    report(3, "table regression", t, criterion_3(&searches));
    let t = Instant::now();
    report(4, "oracle distance bound", t, criterion_4());
    let t = Instant::now();
    report(5, "dual ideal", t, criterion_5(&searches));
    let t = Instant::now();
    report(6, "simulator", t, criterion_6());
    println!("  diagnostic: {}", diagnostic_non_admissible());
    let t = Instant::now();
    report(7, "property suites", t, criterion_7(&searches));
    if !all {
        std::process::exit(1);
    }
}
