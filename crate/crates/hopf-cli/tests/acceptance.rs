//! The eleven acceptance criteria, one pass/fail line each.
//!
//! Run with `cargo test -p hopf-cli --test acceptance -- --nocapture` to
//! see the lines as they are produced; they are also written straight to
//! stderr, so a failing run shows them without the flag.

use std::cell::Cell;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use hopf_cli::suites::{self, Check, Status};
use hopf_cli::{catalog, load, Settings, Subject, Suite};
use hopf_core::cyclo::{cyc_root, is_rational_integer, rat, CycNum};
use hopf_core::fusionindex::analyze;
use hopf_core::groups::{make_alternating, make_cyclic, make_symmetric, Group};
use hopf_core::hopf::{HopfAlg, DEFAULT_MAX_TERMS};
use hopf_core::indicators::{galois_on, regular_indicator, root_count, Route};
use hopf_core::permcalc::{sweedler_perm, IndexSeq};
use hopf_core::repmod::{char_dual, char_mul, invariant_dim, simple_characters};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn ok<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

struct Loaded {
    subject: Subject,
    load: Duration,
}

/// The catalog, loaded once. Each criterion is charged the load time of
/// the algebras it touches.
struct Ctx {
    loaded: Vec<Loaded>,
    charged: Cell<Duration>,
}

impl Ctx {
    fn new() -> Ctx {
        let loaded = catalog()
            .iter()
            .map(|e| {
                let t = Instant::now();
                let subject = load(e.name, Settings::default()).expect("catalog algebras load");
                Loaded { subject, load: t.elapsed() }
            })
            .collect();
        Ctx { loaded, charged: Cell::new(Duration::ZERO) }
    }

    fn get(&self, name: &str) -> &Subject {
        let l = self.loaded.iter().find(|l| l.subject.name == name).expect("catalog name");
        self.charged.set(self.charged.get() + l.load);
        &l.subject
    }

    fn all(&self) -> Vec<&Subject> {
        let names: Vec<String> = self.loaded.iter().map(|l| l.subject.name.clone()).collect();
        names.iter().map(|n| self.get(n)).collect()
    }
}

fn built(name: &str, alg: HopfAlg) -> Subject {
    Subject::new(name, alg, Settings::default()).expect("small algebras load")
}

fn group_alg(g: Group) -> HopfAlg {
    HopfAlg::group_algebra(Arc::new(g)).unwrap()
}

/// Runs `suite` on every subject; any failure or exhausted budget fails the
/// criterion. A subject with no passing check must have skipped every
/// check, and the summary names it.
fn suite_clean(subjects: &[&Subject], suite: Suite) -> Result<Vec<(String, Vec<Check>)>, String> {
    let mut out = Vec::new();
    for s in subjects {
        let checks = suites::run(s, suite);
        let bad: Vec<String> = checks
            .iter()
            .filter(|c| matches!(c.status, Status::Fail | Status::Resource))
            .map(|c| format!("{} on {}: {:?} {}", c.name, s.name, c.status, c.detail))
            .collect();
        ensure!(bad.is_empty(), "{}", bad.join("; "));
        ensure!(!checks.is_empty(), "{} suite ran nothing on {}", suite.name(), s.name);
        out.push((s.name.clone(), checks));
    }
    Ok(out)
}

fn summary(results: &[(String, Vec<Check>)]) -> String {
    let count = |st: Status| results.iter().flat_map(|(_, c)| c).filter(|c| c.status == st).count();
    let mut idle: Vec<String> = results
        .iter()
        .filter(|(_, c)| c.iter().all(|c| c.status == Status::Skip))
        .map(|(a, c)| format!("{} ({})", a, c[0].detail))
        .collect();
    idle.dedup();
    let mut line = format!("{} algebras, {} checks passed, {} skipped", results.len(), count(Status::Pass), count(Status::Skip));
    if !idle.is_empty() {
        line += &format!("; nothing run on {}", idle.join(", "));
    }
    line
}

fn passed(results: &[(String, Vec<Check>)], algebra: &str, name_part: &str) -> bool {
    results
        .iter()
        .filter(|(a, _)| a == algebra)
        .flat_map(|(_, c)| c)
        .any(|c| c.name.contains(name_part) && c.status == Status::Pass)
}

fn criterion_1(ctx: &Ctx) -> Outcome {
    let s = ctx.get("smash:a4-z9");
    let h = &s.alg;
    let g = ok(h.g().find_cycles("(1,4,3)"))?;
    let (c3, c6) = (3u32, 6u32);
    let z31 = ok(h.z_counts(3, 1))?;
    let z32 = ok(h.z_counts(3, 2))?;
    ensure!(z31.get(g, c3) == 3, "z_3,1(g,c³) = {}", z31.get(g, c3));
    ensure!(z32.get(g, c3) == 0, "z_3,2(g,c³) = {}", z32.get(g, c3));
    ensure!(z31.get(g, c6) == 0, "z_3,1(g,c⁶) = {}", z31.get(g, c6));
    ensure!(z32.get(g, c6) == 3, "z_3,2(g,c⁶) = {}", z32.get(g, c6));
    ensure!(z31.get(g, 0) == 3 && z32.get(g, 0) == 3, "z_3,k(g,1) ≠ 3");

    let ring = s.ring.as_ref().map_err(Clone::clone)?;
    let z3 = ok(cyc_root(3, 1))?;
    let i = ring
        .irreducibles
        .iter()
        .position(|c| {
            c.induced_data()
                .is_some_and(|(rep, stab, eta)| stab == [0, 3, 6] && eta[1] == z3 && h.action().orbit(rep).contains(&g))
        })
        .ok_or("no simple induced from η(c³) = ζ₃ over the orbit of (1,4,3)")?;
    let mut eng = s.engine().ok_or("no character ring")?;
    let lam = h.integral();
    let one = CycNum::one();
    let wants = [(1u64, &one + &z3), (2, &one + &(&z3 * &z3))];
    for (k, want) in &wants {
        let closed = ok(eng.closed_value(i, 3, *k))?;
        let generic = ring.get(i).eval(&ok(h.sweedler_power_mk(&lam, 3, *k, DEFAULT_MAX_TERMS))?);
        ensure!(&closed == want, "closed χ(Λ^[3,{}]) = {}", k, closed);
        ensure!(&generic == want, "generic χ(Λ^[3,{}]) = {}", k, generic);
        ensure!(is_rational_integer(&closed).is_none(), "χ(Λ^[3,{}]) reported as an integer", k);
    }
    Ok(format!("{}: ν_3 = {}, ν_3,2 = {}", ring.get(i).name, wants[0].1, wants[1].1))
}

fn criterion_2(ctx: &Ctx) -> Outcome {
    let h = &ctx.get("smash:s5-z3").alg;
    let l2 = ok(h.integral_power_closed(2, 1))?;
    let generic = ok(h.sweedler_power_m(&h.integral(), 2, DEFAULT_MAX_TERMS))?;
    ensure!(generic == l2, "closed and generic Λ^[2] differ");
    let d = h.coproduct(&l2);
    let g = ok(h.g().find_cycles("(3,4)"))?;
    let k = ok(h.g().find_cycles("(3,4,5)"))?;
    let (a, b) = (h.index(g, 2), h.index(k, 2));
    let third = CycNum::from_rational(rat(1, 3));
    ensure!(d.coeff(a, b) == Some(&third), "coefficient is {:?}", d.coeff(a, b));
    ensure!(d.coeff(b, a).is_none(), "swapped coefficient is {:?}", d.coeff(b, a));
    ensure!(!h.is_cocommutative(&l2), "Λ^[2] reported cocommutative");
    Ok("coefficient 1/3, swapped 0, not cocommutative".into())
}

fn criterion_3(ctx: &Ctx) -> Outcome {
    let h = &ctx.get("smash:s8-z8").alg;
    let sigma = ok(sweedler_perm(&ok(IndexSeq::new(vec![4, 2]))?))?;
    let l42 = h.integral_power_closed_perm(&sigma);
    ensure!(!h.is_central(&l42), "Λ^[4,2] reported central");
    let g = ok(h.g().find_cycles("(1,3,5,8,2,4,6,7)"))?;
    let bg = h.b(g);
    let (left, right) = (h.mul(&bg, &l42), h.mul(&l42, &bg));
    ensure!(left != right, "b_g does not witness non-centrality");
    Ok(format!("(b_g⊗1)Λ^[4,2] has {} terms, Λ^[4,2](b_g⊗1) has {}", left.len(), right.len()))
}

fn criterion_4(ctx: &Ctx) -> Outcome {
    let s = ctx.get("group:pq-5-11-3");
    let h = &s.alg;
    let ring = s.ring.as_ref().map_err(Clone::clone)?;
    let i = ring.find("dim5").ok_or("no 5-dimensional simple")?;
    let chi = ring.get(i);
    let (ord, mult) = ok(ring.order_and_multiplicity(chi))?;
    ensure!(ord == 3, "ord = {}", ord);
    ensure!(55 % ord != 0 && (55 * mult) % ord == 0, "divisibility pattern fails with mult {}", mult);
    let fa = ok(analyze(ring, i))?;
    ensure!(fa.reachable.len() == ring.k() && fa.indecomposable_on_reachable, "fusion matrix is decomposable");
    ensure!(fa.index == 1, "index {}", fa.index);

    // χ restricted to Z11 has eigenvalues ζ^{3^n}, n < 5: a trivial
    // constituent in χ^m needs exponents summing to 0 mod 11
    let powers: Vec<u64> = (0..5).map(|n| 3u64.pow(n) % 11).collect();
    let root_sum = |m: u32| (0..5u32.pow(m)).any(|t| (0..m).map(|j| powers[((t / 5u32.pow(j)) % 5) as usize]).sum::<u64>() % 11 == 0);
    let mut power = chi.clone();
    let mut first = None;
    for m in 1..=4u32 {
        if m > 1 {
            power = char_mul(h, &power, chi);
        }
        let invariants = ok(invariant_dim(h, &power))?;
        ensure!((invariants > 0) == root_sum(m), "m = {}: invariants {} but root sum {}", m, invariants, root_sum(m));
        if invariants > 0 && first.is_none() {
            first = Some(m as u64);
        }
    }
    ensure!(first == Some(ord), "first m with invariants is {:?}", first);
    Ok(format!("ord 3, mult {}, index 1; root-sum search agrees for m ≤ 4", mult))
}

fn criterion_5(ctx: &Ctx) -> Outcome {
    let r = suite_clean(&ctx.all(), Suite::Sweedler)?;
    ensure!(passed(&r, "group:S3", "P(5,2)"), "P(5,2) check missing");
    Ok(summary(&r))
}

fn criterion_6(ctx: &Ctx) -> Outcome {
    let r = suite_clean(&ctx.all(), Suite::Integral)?;
    ensure!(passed(&r, "group:pq-5-11-3", "Λ^[6] = Λ^[3,2]"), "odd-dimension identity not verified on pq");
    ensure!(passed(&r, "smash:a4-z9", "z-count relations"), "z-count relations not verified on a4-z9");
    Ok(summary(&r))
}

fn criterion_7(ctx: &Ctx) -> Outcome {
    let s = ctx.get("double:S3");
    let r = suite_clean(&[s], Suite::Indicators)?;
    let ring = s.ring.as_ref().map_err(Clone::clone)?;
    ensure!(ring.k() == 8, "D(S3) has {} simples", ring.k());
    let mut eng = s.engine().ok_or("no character ring")?;
    for i in 0..ring.k() {
        let d = ring.get(i).degree;
        for m in 1..=6u64 {
            let rep = ok(eng.nu(i, m))?;
            for route in [Route::Definition, Route::ClosedForm, Route::CanonicalTensor] {
                ensure!(rep.routes_used.contains(&route), "ν_{}(chi{}) skipped {}", m, i, route.as_str());
            }
            let rotation = d.pow(m as u32) <= 10_000;
            ensure!(rep.routes_used.contains(&Route::Rotation) == rotation, "rotation route for ν_{}(chi{})", m, i);
        }
        let self_dual = char_dual(&s.alg, ring.get(i)).values == ring.get(i).values;
        ensure!((ok(eng.fs_classify(i))? != 0) == self_dual, "ν₂ classification of chi{}", i);
    }

    // double_u evaluates ν_m(V) for V a K[F]-module through u ∈ D(F)
    let mut double_u_cells = 0;
    for (name, g) in [("K[S3]", make_symmetric(3)), ("K[Z4]", make_cyclic(4))] {
        let sub = built(name, group_alg(ok(g)?));
        let mut e = sub.engine().ok_or("no character ring")?;
        for i in 0..e.ring().k() {
            for m in 1..=6 {
                let rep = ok(e.nu(i, m))?;
                ensure!(rep.routes_used.contains(&Route::DoubleU), "{}: double_u missing for ν_{}", name, m);
                double_u_cells += 1;
            }
        }
    }

    for (name, g) in [("K[S3]", make_symmetric(3)), ("K[Z6]", make_cyclic(6)), ("K[A4]", make_alternating(4))] {
        let h = group_alg(ok(g)?);
        for m in 2..=6u64 {
            let nu = ok(regular_indicator(&h, m))?;
            let tr = ok(h.e_map_trace(m as u32))?;
            let roots = CycNum::from_int(root_count(&h, m) as i64);
            ensure!(nu == tr && tr == roots, "{}: ν_{}(χ_R) = {}, tr = {}, roots = {}", name, m, nu, tr, roots);
        }
    }
    Ok(format!("{}; {} double_u cells; regular indicators on K[S3], K[Z6], K[A4]", summary(&r), double_u_cells))
}

fn criterion_8(ctx: &Ctx) -> Outcome {
    let r = suite_clean(&ctx.all(), Suite::Galois)?;
    let z3 = ok(cyc_root(3, 1))?;
    let nu31 = &CycNum::one() + &z3;
    ensure!(ok(galois_on(&nu31, 2, 3))? == &CycNum::one() + &(&z3 * &z3), "σ_2(1+ζ₃) ≠ ν_3,2");
    Ok(summary(&r))
}

fn criterion_9(ctx: &Ctx) -> Outcome {
    Ok(summary(&suite_clean(&ctx.all(), Suite::Cauchy)?))
}

fn criterion_10(ctx: &Ctx) -> Outcome {
    let all = ctx.all();
    let mut r = suite_clean(&all, Suite::Divisibility)?;
    r.extend(suite_clean(&all, Suite::Fusion)?);
    Ok(summary(&r))
}

fn criterion_11(ctx: &Ctx) -> Outcome {
    let dz3 = built("double:Z3", HopfAlg::double(Arc::new(ok(make_cyclic(3))?)).unwrap());
    let subjects = [ctx.get("double:Z2"), &dz3, ctx.get("double:Z4"), ctx.get("double:S3")];
    let r = suite_clean(&subjects, Suite::Double)?;
    for name in ["double:Z2", "double:Z3", "double:Z4", "double:S3"] {
        ensure!(passed(&r, name, "u central"), "u not verified on {}", name);
        ensure!(passed(&r, name, "induced character"), "character identity not verified on {}", name);
    }
    for name in ["double:Z4", "double:S3"] {
        ensure!(passed(&r, name, "restrictions span"), "restriction rank not verified on {}", name);
    }
    let d = simple_characters(dz3.alg.clone(), 1).map_err(|e| e.to_string())?;
    ensure!(d.k() == 9, "D(Z3) has {} simples", d.k());
    Ok(summary(&r))
}

#[test]
fn acceptance_criteria() {
    type Criterion = fn(&Ctx) -> Outcome;
    let criteria: [(&str, u64, Criterion); 11] = [
        ("A4/Z9 z-counts and nonintegral indicators", 30, criterion_1),
        ("S5/Z3 coproduct of the second integral power", 60, criterion_2),
        ("S8/Z8 non-central integral power", 120, criterion_3),
        ("Z11⋊Z5 order, multiplicity and index", 30, criterion_4),
        ("Sweedler calculus suite", 60, criterion_5),
        ("integral-power suite", 120, criterion_6),
        ("indicator route agreement", 120, criterion_7),
        ("Galois action and integrality", 60, criterion_8),
        ("Cauchy's theorem", 120, criterion_9),
        ("divisibility and fusion", 120, criterion_10),
        ("double suite", 60, criterion_11),
    ];
    let t = Instant::now();
    let ctx = Ctx::new();
    let mut err = std::io::stderr();
    let _ = writeln!(err, "catalog loaded in {:.1?}", t.elapsed());
    let mut failed = Vec::new();
    for (n, (title, limit, f)) in criteria.into_iter().enumerate() {
        ctx.charged.set(Duration::ZERO);
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(|| f(&ctx))).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let elapsed = t.elapsed() + ctx.charged.get();
        let in_time = elapsed <= Duration::from_secs(limit);
        let pass = result.is_ok() && in_time;
        let detail = match &result {
            Ok(d) if in_time => d.clone(),
            Ok(_) => "over the time limit".to_string(),
            Err(e) => e.clone(),
        };
        let _ = writeln!(
            err,
            "criterion {:>2} {} ({:.1} s / {} s) {}: {}",
            n + 1,
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit,
            title,
            detail
        );
        if !pass {
            failed.push(n + 1);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {:?}", failed);
}
