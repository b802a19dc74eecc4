//! Seeded property suite covering every module. `cga selftest` prints one
//! line per property; the report is a pure function of the configuration.

use std::fmt::Write as _;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conformal::{ConformalModel, Convention, Representation, TargetPoint};
use crate::error::Result;
use crate::ga::{exp_bivector, exp_bivector_series, Blade, Multivector, Signature, Versor, DEFAULT_EXP_TERMS};
use crate::little_groups::{act, decompose_infinity_generator, isometry_algebra, stabilizer_of};
use crate::so21::{self, build_rep, RepLabel};

pub const DEFAULT_SEED: u64 = 20_240_601;

/// Signatures exercised by the algebra-kernel properties.
pub const KERNEL_SIGNATURES: [(usize, usize); 7] = [(2, 0), (1, 1), (3, 1), (2, 2), (4, 1), (3, 2), (4, 2)];

pub const MODEL_ALIASES: [&str; 5] = ["E2", "M11", "E3", "M21", "M31"];

#[derive(Clone, Debug)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Random cases per signature for the kernel properties.
    pub cases: usize,
    /// Debug hook: products are computed in an algebra whose first basis
    /// vector has the wrong square, so metric soundness must fail.
    pub corrupt_metric: bool,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            cases: 200,
            corrupt_metric: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PropertyOutcome {
    pub module: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl PropertyOutcome {
    fn new(module: &'static str, name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            module,
            name,
            passed,
            detail,
        }
    }

    fn from_result(module: &'static str, name: &'static str, r: Result<(bool, String)>) -> Self {
        match r {
            Ok((passed, detail)) => Self::new(module, name, passed, detail),
            Err(e) => Self::new(module, name, false, format!("error: {e}")),
        }
    }
}

pub fn all_passed(outcomes: &[PropertyOutcome]) -> bool {
    outcomes.iter().all(|o| o.passed)
}

/// One `PASS|FAIL module/name: detail` line per property plus a summary.
pub fn format_report(outcomes: &[PropertyOutcome]) -> String {
    let mut out = String::new();
    for o in outcomes {
        let tag = if o.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "{tag} {}/{}: {}", o.module, o.name, o.detail);
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    let _ = writeln!(out, "{passed}/{} properties passed", outcomes.len());
    out
}

pub fn run_selftest(cfg: &SelftestConfig) -> Vec<PropertyOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    kernel_properties(cfg, &mut rng, &mut out);
    conformal_properties(cfg, &mut rng, &mut out);
    little_group_properties(&mut rng, &mut out);
    rep_properties(&mut out);
    out
}

/// Sparse random multivector: each blade present with probability
/// `density`, coefficients uniform in `[-1, 1]`.
pub fn random_multivector(rng: &mut impl Rng, sig: &Arc<Signature>, density: f64) -> Multivector {
    let mut terms = Vec::new();
    for m in 0..sig.blade_count() {
        if rng.random::<f64>() < density {
            terms.push((Blade(m as u8), rng.random_range(-1.0..1.0)));
        }
    }
    Multivector::from_terms(sig, terms)
}

pub fn random_vector(rng: &mut impl Rng, sig: &Arc<Signature>) -> Multivector {
    let coords: Vec<f64> = (0..sig.dim()).map(|_| rng.random_range(-1.0..1.0)).collect();
    Multivector::vector(sig, &coords).expect("length matches")
}

pub fn random_point(rng: &mut impl Rng, dim: usize, scale: f64) -> TargetPoint {
    TargetPoint::new((0..dim).map(|_| rng.random_range(-scale..scale)).collect::<Vec<_>>())
}

/// Random rotor/boost: the exponential of a random coordinate bivector.
pub fn random_rotor(rng: &mut impl Rng, sig: &Arc<Signature>) -> Versor {
    let n = sig.dim();
    let i = rng.random_range(0..n);
    let mut j = rng.random_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    let b = Multivector::blade(sig, Blade((1 << i) | (1 << j)), rng.random_range(-1.5..1.5));
    exp_bivector(&b, DEFAULT_EXP_TERMS).expect("bivector")
}

/// Translator `exp(-½ t ∧ inf)` by a random target vector.
pub fn random_translator(rng: &mut impl Rng, model: &ConformalModel) -> Versor {
    let t = random_point(rng, model.target_dim(), 2.0);
    let mut tv = Multivector::zero(model.signature());
    for (i, c) in t.coords().iter().enumerate() {
        tv += &Multivector::basis(model.signature(), i).scale(*c);
    }
    let b = tv.outer_product(model.infinity()).expect("same algebra").scale(-0.5);
    exp_bivector(&b, DEFAULT_EXP_TERMS).expect("bivector")
}

fn rel(a: f64, scale: f64) -> f64 {
    a / scale.max(1e-300)
}

fn kernel_properties(cfg: &SelftestConfig, rng: &mut ChaCha8Rng, out: &mut Vec<PropertyOutcome>) {
    let sigs: Vec<Arc<Signature>> = KERNEL_SIGNATURES
        .iter()
        .map(|&(p, q)| Arc::new(Signature::new(p, q).expect("valid signature")))
        .collect();

    // Metric soundness, optionally against a corrupted product algebra.
    let mut worst = 0.0f64;
    for sig in &sigs {
        let algebra = if cfg.corrupt_metric {
            let mut squares = sig.squares().to_vec();
            squares[0] = -squares[0];
            Arc::new(Signature::with_metric(sig.labels().to_vec(), squares).expect("valid metric"))
        } else {
            Arc::clone(sig)
        };
        for i in 0..sig.dim() {
            for j in 0..sig.dim() {
                let vi = Multivector::basis(&algebra, i);
                let vj = Multivector::basis(&algebra, j);
                let got = vi.scalar_product(&vj).expect("same algebra");
                let expected = if i == j { sig.square(i) } else { 0.0 };
                worst = worst.max((got - expected).abs());
            }
        }
    }
    out.push(PropertyOutcome::new(
        "ga-core",
        "metric-soundness",
        worst == 0.0,
        format!("max |vi·vj - g_ij| = {worst:e} over {} signatures", sigs.len()),
    ));

    let mut assoc = 0.0f64;
    let mut grade = 0.0f64;
    let mut rev = 0.0f64;
    for sig in &sigs {
        for _ in 0..cfg.cases {
            let a = random_multivector(rng, sig, 0.3);
            let b = random_multivector(rng, sig, 0.3);
            let c = random_multivector(rng, sig, 0.3);
            let scale = a.norm() * b.norm() * c.norm();
            let d = (&(&a * &b) * &c).max_diff(&(&a * &(&b * &c)));
            assoc = assoc.max(rel(d, scale));
            let mut sum = Multivector::zero(sig);
            for k in 0..=sig.dim() {
                sum += &a.grade_project(k);
            }
            grade = grade.max(sum.max_diff(&a));
            let d = (&a * &b).reverse().max_diff(&(&b.reverse() * &a.reverse()));
            rev = rev.max(rel(d, a.norm() * b.norm()));
        }
    }
    out.push(PropertyOutcome::new(
        "ga-core",
        "associativity",
        assoc <= 1e-10,
        format!("max relative |(ab)c - a(bc)| = {assoc:e} ({} cases x {} signatures)", cfg.cases, sigs.len()),
    ));
    out.push(PropertyOutcome::new(
        "ga-core",
        "grade-reconstruction",
        grade == 0.0,
        format!("max |Σ<a>_k - a| = {grade:e}"),
    ));
    out.push(PropertyOutcome::new(
        "ga-core",
        "reverse-anti-automorphism",
        rev <= 1e-12,
        format!("max relative |rev(ab) - rev(b)rev(a)| = {rev:e}"),
    ));

    let mut dd = 0.0f64;
    for sig in &sigs {
        let i2 = Multivector::pseudoscalar_square(sig);
        for _ in 0..20 {
            let a = random_multivector(rng, sig, 0.3);
            dd = dd.max(a.dual().dual().max_diff(&a.scale(1.0 / i2)));
        }
    }
    out.push(PropertyOutcome::new(
        "ga-core",
        "double-dual-sign",
        dd <= 1e-12,
        format!("max |dual(dual(a)) - a/I²| = {dd:e}"),
    ));

    let mut iso = 0.0f64;
    let mut exp_dev = 0.0f64;
    for sig in &sigs {
        for _ in 0..20 {
            let v = random_rotor(rng, sig);
            let x = random_vector(rng, sig);
            let y = random_vector(rng, sig);
            let before = x.scalar_product(&y).expect("same algebra");
            let after = v
                .apply(&x)
                .and_then(|vx| vx.scalar_product(&v.apply(&y)?))
                .expect("same algebra");
            iso = iso.max(rel((after - before).abs(), x.norm() * y.norm()));
            let b = Multivector::blade(sig, Blade(0b11), rng.random_range(-2.0..2.0));
            let closed = exp_bivector(&b, DEFAULT_EXP_TERMS).expect("bivector");
            let series = exp_bivector_series(&b, DEFAULT_EXP_TERMS).expect("bivector");
            exp_dev = exp_dev.max(rel(
                closed.multivector().max_diff(series.multivector()),
                closed.multivector().norm(),
            ));
        }
    }
    for alias in MODEL_ALIASES {
        let m = ConformalModel::from_alias(alias).expect("alias");
        for _ in 0..20 {
            let v = random_translator(rng, &m);
            let x = random_vector(rng, m.signature());
            let y = random_vector(rng, m.signature());
            let before = x.scalar_product(&y).expect("same algebra");
            let after = v
                .apply(&x)
                .and_then(|vx| vx.scalar_product(&v.apply(&y)?))
                .expect("same algebra");
            iso = iso.max(rel((after - before).abs(), x.norm() * y.norm()));
        }
    }
    out.push(PropertyOutcome::new(
        "ga-core",
        "versor-isometry",
        iso <= 1e-12,
        format!("max relative |V(x)·V(y) - x·y| = {iso:e} (rotors, boosts, translators)"),
    ));
    out.push(PropertyOutcome::new(
        "ga-core",
        "exp-series-vs-closed-form",
        exp_dev <= 1e-12,
        format!("max relative deviation = {exp_dev:e}"),
    ));
}

fn conformal_properties(cfg: &SelftestConfig, rng: &mut ChaCha8Rng, out: &mut Vec<PropertyOutcome>) {
    let n_points = 5 * cfg.cases;
    let models: Vec<ConformalModel> = MODEL_ALIASES
        .iter()
        .map(|a| ConformalModel::from_alias(a).expect("alias"))
        .collect();

    let mut rt = 0.0f64;
    let mut norm_dev = 0.0f64;
    let mut exact = 0usize;
    let mut dist = 0.0f64;
    let mut total = 0usize;
    for m in &models {
        for _ in 0..n_points {
            let x = random_point(rng, m.target_dim(), 10.0);
            let y = random_point(rng, m.target_dim(), 10.0);
            let p = m.embed_point(&x).expect("dimension");
            let back = m.project_point(&p).expect("finite point");
            rt = rt.max(max_coord_diff(&back, &x));
            let s = m.dot_infinity(&p).expect("same algebra");
            let xx = m.target_dot(x.coords(), x.coords()).abs();
            norm_dev = norm_dev.max((s + 1.0).abs() / (1.0 + xx));
            exact += usize::from(s == -1.0);
            total += 1;
            let d2 = m.squared_distance(&x, &y, Convention::Standard).expect("dimension");
            let diff: Vec<f64> = x.coords().iter().zip(y.coords()).map(|(a, b)| a - b).collect();
            let oracle = m.target_dot(&diff, &diff);
            dist = dist.max((d2 - oracle).abs());
        }
    }
    out.push(PropertyOutcome::new(
        "conformal",
        "embed-project-round-trip",
        rt <= 1e-12,
        format!("max |project(embed(x)) - x| = {rt:e} ({n_points} points x {} models)", models.len()),
    ));
    out.push(PropertyOutcome::new(
        "conformal",
        "embed-normalization",
        norm_dev <= 1e-15,
        format!(
            "max |P(x)·inf + 1|/(1+|x·x|) = {norm_dev:e}; bit-exact -1 in {exact}/{total}"
        ),
    ));
    out.push(PropertyOutcome::new(
        "conformal",
        "distance-oracle",
        dist <= 1e-10,
        format!("max |d²(standard) - Σ±(a-b)²| = {dist:e}"),
    ));

    // Circles in E2 and shells in M11 through random triples.
    let mut agree = true;
    let mut defining = 0.0f64;
    let mut scale_ok = true;
    let mut covariant = true;
    let mut probes = 0usize;
    for alias in ["E2", "M11"] {
        let m = ConformalModel::from_alias(alias).expect("alias");
        for _ in 0..cfg.cases {
            let pts: Vec<TargetPoint> = (0..3).map(|_| random_point(rng, 2, 3.0)).collect();
            let s = m.circle_through(&pts[0], &pts[1], &pts[2]).expect("dimension");
            if s.blade.is_zero() {
                continue;
            }
            let sd = m.dualize(&s);
            for p in &pts {
                let v = m.incidence_direct(p, &s).expect("direct");
                let pn = m.embed_point(p).expect("dimension").norm();
                defining = defining.max(v / (pn * s.blade.norm()));
            }
            let mut test_points = pts.clone();
            test_points.push(random_point(rng, 2, 3.0));
            test_points.push(TargetPoint::new(vec![pts[0].0[0] + 1e-3, pts[0].0[1]]));
            let lambda = rng.random_range(0.1..10.0) * if rng.random::<bool>() { 1.0 } else { -1.0 };
            let scaled = m.round(s.blade.scale(lambda), Representation::Direct).expect("round");
            let v = random_rotor(rng, m.signature());
            let vs = m
                .round(
                    v.apply(&s.blade).expect("same algebra").grade_project(s.grade()),
                    Representation::Direct,
                )
                .expect("round");
            for x in &test_points {
                let d = m.is_incident(x, &s).expect("direct");
                agree &= d == m.is_incident(x, &sd).expect("dual");
                scale_ok &= d == m.is_incident(x, &scaled).expect("direct");
                let vx = v.apply(&m.embed_point(x).expect("dimension")).expect("same algebra");
                if let Ok(y) = m.project_point(&vx) {
                    covariant &= d == m.is_incident(&y, &vs).expect("direct");
                }
                probes += 1;
            }
        }
    }
    out.push(PropertyOutcome::new(
        "conformal",
        "defining-points-incident",
        defining <= 1e-9,
        format!("max relative |P(a)∧S| = {defining:e}"),
    ));
    out.push(PropertyOutcome::new(
        "conformal",
        "direct-dual-agreement",
        agree,
        format!("{probes} probes"),
    ));
    out.push(PropertyOutcome::new(
        "conformal",
        "scale-invariance",
        scale_ok,
        format!("{probes} probes"),
    ));
    out.push(PropertyOutcome::new(
        "conformal",
        "isometry-covariance",
        covariant,
        format!("{probes} probes under random rotors/boosts"),
    ));
}

fn max_coord_diff(a: &TargetPoint, b: &TargetPoint) -> f64 {
    a.coords()
        .iter()
        .zip(b.coords())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

fn little_group_properties(rng: &mut ChaCha8Rng, out: &mut Vec<PropertyOutcome>) {
    let mut sound = 0.0f64;
    let mut complete = true;
    let mut jacobi = 0.0f64;
    let mut finite = 0.0f64;
    let mut runs = 0usize;
    for alias in MODEL_ALIASES {
        let m = ConformalModel::from_alias(alias).expect("alias");
        let alg = isometry_algebra(m.signature());
        jacobi = jacobi.max(alg.jacobi_residual());
        let mut fixed = vec![m.infinity().clone(), m.e_plus(), m.e_minus()];
        for _ in 0..3 {
            fixed.push(random_vector(rng, m.signature()));
        }
        for f in &fixed {
            let st = match stabilizer_of(f, &alg) {
                Ok(st) => st,
                Err(_) => {
                    complete = false;
                    continue;
                }
            };
            runs += 1;
            complete &= st.dim() + st.rank == st.ambient_dim;
            jacobi = jacobi.max(st.algebra.jacobi_residual());
            for b in st.algebra.basis() {
                let a = act(b, f).expect("bivector");
                sound = sound.max(rel(a.norm(), b.norm() * f.norm()));
                for _ in 0..2 {
                    let t = rng.random_range(-2.0..2.0);
                    let v = exp_bivector(&b.scale(t), DEFAULT_EXP_TERMS).expect("bivector");
                    let g = v.apply(f).expect("same algebra");
                    finite = finite.max(rel(g.max_diff(f), f.norm()));
                }
            }
        }
    }
    out.push(PropertyOutcome::new(
        "little-groups",
        "nullspace-soundness",
        sound <= 1e-9,
        format!("max relative |[B, fixed]| = {sound:e} over {runs} stabilizers"),
    ));
    out.push(PropertyOutcome::new(
        "little-groups",
        "nullspace-completeness",
        complete,
        "dim + rank = ambient dim".into(),
    ));
    out.push(PropertyOutcome::new(
        "little-groups",
        "finite-fixing",
        finite <= 1e-9,
        format!("max relative |exp(tB) fixed - fixed| = {finite:e}"),
    ));
    out.push(PropertyOutcome::new(
        "little-groups",
        "jacobi",
        jacobi <= 1e-9,
        format!("max Jacobi residual = {jacobi:e}"),
    ));

    // Null and unit vectors in model algebras of dimension n = 4, 5, 6.
    let mut counts = true;
    let mut detail = String::new();
    for (p, q) in [(3, 1), (2, 2), (4, 1), (3, 2), (4, 2), (3, 3)] {
        let sig = Arc::new(Signature::new(p, q).expect("valid signature"));
        let n = p + q;
        let alg = isometry_algebra(&sig);
        let null = &Multivector::basis(&sig, 0) + &Multivector::basis(&sig, n - 1);
        let unit_plus = Multivector::basis(&sig, 0);
        let unit_minus = Multivector::basis(&sig, n - 1);
        let dn = stabilizer_of(&null, &alg).map(|s| s.dim()).unwrap_or(0);
        let dp = stabilizer_of(&unit_plus, &alg).map(|s| s.dim()).unwrap_or(0);
        let dm = stabilizer_of(&unit_minus, &alg).map(|s| s.dim()).unwrap_or(0);
        let ok = dn == n * (n - 1) / 2 - (n - 1) && dp == (n - 1) * (n - 2) / 2 && dm == dp;
        counts &= ok;
        let _ = write!(detail, "({p},{q}):{dn}/{dp}/{dm} ");
    }
    out.push(PropertyOutcome::new(
        "little-groups",
        "dimension-counts",
        counts,
        format!("null/unit+/unit- stabilizer dims {}", detail.trim_end()),
    ));

    let m = ConformalModel::from_alias("E2").expect("alias");
    let r = stabilizer_of(&m.e_plus(), &isometry_algebra(m.signature())).map(|st| {
        let gens = ["e-^e1", "e-^e2", "e1^e2"].map(|t| m.parse(t).expect("valid text"));
        let fwd = gens.iter().map(|g| st.algebra.coordinates(g).1).fold(0.0, f64::max);
        // Reverse direction: each stabilizer element in the span of gens.
        let span = crate::little_groups::LieAlgebraPresentation::from_basis(m.signature(), gens.to_vec())
            .expect("closed");
        let back = st.algebra.basis().iter().map(|b| span.coordinates(b).1).fold(0.0, f64::max);
        let r = fwd.max(back);
        (st.dim() == 3 && r < 1e-10, format!("dim {}, mutual projection residual {r:e}", st.dim()))
    });
    out.push(PropertyOutcome::from_result("little-groups", "e-plus-span", r));

    let mut resum = 0.0f64;
    for alias in ["E2", "M11", "E3"] {
        let m = ConformalModel::from_alias(alias).expect("alias");
        for _ in 0..100 {
            let b = random_multivector(rng, m.signature(), 0.6).grade_project(2);
            let d = decompose_infinity_generator(&m, &b).expect("bivector");
            let sum = &(&d.translation_part + &d.tangent_part) + &d.remainder;
            resum = resum.max(sum.max_diff(&b));
        }
    }
    out.push(PropertyOutcome::new(
        "little-groups",
        "decomposition-resums",
        resum <= 1e-14,
        format!("max |translation + tangent + remainder - B| = {resum:e}"),
    ));
}

fn rep_properties(out: &mut Vec<PropertyOutcome>) {
    let mut labels = Vec::new();
    for s in [0.5, 1.0, 2.0] {
        for eps in [0.0, 0.5] {
            labels.push(RepLabel::principal(s, eps).expect("valid"));
        }
    }
    for k in [1.0, 2.0] {
        labels.push(RepLabel::discrete_plus(k).expect("valid"));
        labels.push(RepLabel::discrete_minus(k).expect("valid"));
    }
    let mut comm = 0.0f64;
    let mut cas = 0.0f64;
    let mut qcomm = 0.0f64;
    let mut herm = 0.0f64;
    let mut trunc = 0.0f64;
    for &l in &labels {
        let Ok(rep) = build_rep(l, 20) else {
            out.push(PropertyOutcome::new("so21-reps", "build", false, format!("{l} failed")));
            return;
        };
        comm = comm.max(rep.check_commutators().max_interior());
        cas = cas.max(rep.check_casimir().max_interior());
        qcomm = qcomm.max(rep.casimir_commutator_residual());
        herm = herm.max(rep.hermiticity_residual());
        let small = build_rep(l, 10).expect("valid");
        let big = build_rep(l, 40).expect("valid");
        trunc = trunc.max((small.check_casimir().max_interior() - big.check_casimir().max_interior()).abs());
    }
    out.push(PropertyOutcome::new(
        "so21-reps",
        "interior-commutators",
        comm <= 1e-10,
        format!("max interior residual = {comm:e} over {} labels", labels.len()),
    ));
    out.push(PropertyOutcome::new(
        "so21-reps",
        "interior-casimir",
        cas <= 1e-10,
        format!("max |Q - q·1| on interior = {cas:e}"),
    ));
    out.push(PropertyOutcome::new(
        "so21-reps",
        "casimir-commutes",
        qcomm <= 1e-10,
        format!("max |[Q, Si]| on interior = {qcomm:e}"),
    ));
    out.push(PropertyOutcome::new(
        "so21-reps",
        "hermiticity",
        herm == 0.0,
        format!("max |A - A†| = {herm:e}"),
    ));
    out.push(PropertyOutcome::new(
        "so21-reps",
        "truncation-independence",
        trunc <= 1e-12,
        format!("max change between M=10 and M=40 = {trunc:e}"),
    ));

    let mut min = f64::INFINITY;
    for s in [0.1, 0.5, 1.0, 2.0] {
        for eps in [0.0, 0.5] {
            min = min.min(so21::principal_radicand_scan(s, eps, 10_000).0);
        }
    }
    out.push(PropertyOutcome::new(
        "so21-reps",
        "principal-radicands-positive",
        min > 0.0,
        format!("min m(m+1) - q over |m| <= 1e4 = {min:e}"),
    ));

    let two_sided: Vec<bool> = labels.iter().map(so21::two_sided_spectrum_check).collect();
    let expected: Vec<bool> = labels.iter().map(|l| matches!(l, RepLabel::Principal { .. })).collect();
    out.push(PropertyOutcome::new(
        "so21-reps",
        "two-sided-spectrum",
        two_sided == expected,
        "true exactly for the principal branches".into(),
    ));

    let m = ConformalModel::from_alias("E2").expect("alias");
    let r = stabilizer_of(&m.e_plus(), &isometry_algebra(m.signature())).and_then(|st| {
        let gens = ["e-^e1", "e-^e2", "e1^e2"].map(|t| m.parse(t).expect("valid text"));
        let mut worst = 0.0f64;
        for &l in &labels {
            let rep = build_rep(l, 20)?;
            worst = worst.max(so21::hermitization_residual(&rep, &st, &gens)?);
        }
        Ok((worst < 1e-10, format!("max structure-constant mismatch under ρ(Sj) = i·Ŝj = {worst:e}")))
    });
    out.push(PropertyOutcome::from_result("so21-reps", "cross-module-structure-constants", r));

}
