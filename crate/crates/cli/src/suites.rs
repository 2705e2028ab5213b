//! Verification suites: each function checks one family of claims and
//! reports aggregated pass/fail lines.
//!
//! Randomized sweeps draw from [`Sampler`] only, so a fixed seed fixes
//! the whole run. Dual routes are kept strictly apart: theorem-shaped
//! classifiers and closed forms on one side, rank/minimal-polynomial
//! oracles on matrix models on the other.

use idempair_core::classify::{
    classify_zm, classify_zm_w3, classify_zm_w4, index_bound, matrix_spectrum, psi_bundle,
    rank_group_invertible, rank_properly_group_invertible, CoefficientProfile, Verdict,
    VerdictKind,
};
use idempair_core::drazin::{
    algebra_drazin, closed_form_drazin_alpha_pq, closed_form_group_lambda, matrix_drazin,
    matrix_index,
};
use idempair_core::element::{int, rat, Element};
use idempair_core::matrix::RationalMatrix;
use idempair_core::models::{
    ambient_unit_in_span, build_family_pair, build_lambda_pair, build_zn_pair, build_zw3_pair,
    build_zw4_pair, pinned_z3_pair, word_image_rank, LambdaSpec, ModelPair,
};
use idempair_core::pres::{
    tightly_coupled_witness, FamilyKind, OddZero, Presentation, WitnessShape, WordRelation,
};
use idempair_core::table::StructureTable;
use idempair_core::word::{Gen, Word};
use num_rational::BigRational;
use num_traits::Zero;

use crate::report::CheckLine;
use crate::rng::Sampler;

const FAMILIES: [FamilyKind; 4] = [
    FamilyKind::F1,
    FamilyKind::F2,
    FamilyKind::F3,
    FamilyKind::F4,
];

fn family_dimension(kind: FamilyKind, m: usize) -> usize {
    match kind {
        FamilyKind::F1 => 4 * m - 3,
        FamilyKind::F2 | FamilyKind::F3 => 4 * m - 2,
        FamilyKind::F4 => 4 * m - 1,
    }
}

fn family_radical_dimension(kind: FamilyKind, m: usize) -> usize {
    match kind {
        FamilyKind::F1 => 4 * m - 6,
        FamilyKind::F2 | FamilyKind::F3 => 4 * m - 5,
        FamilyKind::F4 => 4 * m - 4,
    }
}

/// Counts failures across a sweep, keeping only the first for the report.
struct Tally {
    total: usize,
    bad: usize,
    first_bad: Option<String>,
}

impl Tally {
    fn new() -> Tally {
        Tally {
            total: 0,
            bad: 0,
            first_bad: None,
        }
    }

    fn hit(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.bad += 1;
            if self.first_bad.is_none() {
                self.first_bad = Some(describe());
            }
        }
    }

    fn line(&self, name: impl Into<String>) -> CheckLine {
        let residual = match &self.first_bad {
            None => format!("{}/{} exact", self.total - self.bad, self.total),
            Some(w) => format!("{} of {} failed, first: {}", self.bad, self.total, w),
        };
        CheckLine::new(name, self.bad == 0, residual)
    }
}

// ---------------------------------------------------------------------
// Dimensions and witnesses

pub fn criterion_dimensions() -> Vec<CheckLine> {
    let mut checks = Vec::new();
    for kind in FAMILIES {
        let mut dims = Tally::new();
        for m in 2..=8 {
            let got = Presentation::family(kind, m)
                .map(|p| p.dimension())
                .unwrap_or(0);
            dims.hit(got == family_dimension(kind, m), || {
                format!("m={m}: dimension {got} != {}", family_dimension(kind, m))
            });
        }
        checks.push(dims.line(format!("dimension-{}-m2..8", kind.name())));

        let mut ranks = Tally::new();
        for m in 2..=6 {
            let ok = (|| -> idempair_core::Result<bool> {
                let pres = Presentation::family(kind, m)?;
                let pair = build_family_pair(kind, m)?;
                Ok(word_image_rank(&pair, &pres) == pres.dimension())
            })()
            .unwrap_or(false);
            ranks.hit(ok, || format!("m={m}: model word-image rank is off"));
        }
        checks.push(ranks.line(format!("model-rank-{}-m2..6", kind.name())));
    }
    checks
}

fn word_matrix(w: &Word, p: &RationalMatrix, q: &RationalMatrix) -> RationalMatrix {
    let pick = |g: Gen| match g {
        Gen::P => p,
        Gen::Q => q,
    };
    let mut gen = w.start();
    let mut acc = pick(gen).clone();
    for _ in 1..w.order() {
        gen = match gen {
            Gen::P => Gen::Q,
            Gen::Q => Gen::P,
        };
        acc = acc.mul(pick(gen));
    }
    acc
}

fn relation_in_pair(rel: &WordRelation, p: &RationalMatrix, q: &RationalMatrix) -> bool {
    word_matrix(&rel.lhs, p, q) == word_matrix(&rel.rhs, p, q)
}

/// The collapse-implication witnesses, checked as exact normal-form
/// equalities inside every presentation that imposes their hypothesis,
/// and nondegenerately inside a commuting matrix pair.
pub fn criterion_tight_witnesses() -> Vec<CheckLine> {
    let mut presentations = Vec::new();
    for n in 1..=16 {
        presentations.push(Presentation::zn(n, OddZero::QpZero).expect("n >= 1"));
        if n % 2 == 1 {
            presentations.push(Presentation::zn(n, OddZero::PqZero).expect("n >= 1"));
        }
    }
    for kind in FAMILIES {
        for m in 2..=6 {
            presentations.push(Presentation::family(kind, m).expect("m >= 2"));
        }
    }

    let shapes = [WitnessShape::OddP, WitnessShape::OddQ, WitnessShape::EvenQ];
    let mut implications = Tally::new();
    let mut hypotheses_held = 0usize;
    for m in 2..=6 {
        for k in 1..m {
            for shape in shapes {
                let w = tightly_coupled_witness(shape, m, k).expect("valid (m, k)");
                for pres in &presentations {
                    if w.hypothesis.holds_in(pres) {
                        hypotheses_held += 1;
                        implications.hit(w.derived.holds_in(pres), || {
                            format!("{shape:?} m={m} k={k} in {pres:?}")
                        });
                    }
                }
            }
        }
    }
    let mut checks = Vec::new();
    let mut line = implications.line("tight-witness-presentations");
    if implications.bad == 0 {
        line.residual = format!("{hypotheses_held} imposed hypotheses, derived relation held in all");
    }
    checks.push(line);

    // Commuting projections: every mixed word collapses to the same
    // rank-one projection, so the hypothesis holds with nonzero sides.
    let p = RationalMatrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
    let q = RationalMatrix::from_int_rows(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 1]]);
    let mut pair_checks = Tally::new();
    let mut nondegenerate = 0usize;
    for m in 2..=6 {
        for k in 1..m {
            for shape in shapes {
                let w = tightly_coupled_witness(shape, m, k).expect("valid (m, k)");
                if relation_in_pair(&w.hypothesis, &p, &q) {
                    if !word_matrix(&w.hypothesis.lhs, &p, &q).is_zero() {
                        nondegenerate += 1;
                    }
                    pair_checks.hit(relation_in_pair(&w.derived, &p, &q), || {
                        format!("{shape:?} m={m} k={k}")
                    });
                }
            }
        }
    }
    pair_checks.hit(nondegenerate > 0, || {
        "hypothesis never held nondegenerately".into()
    });
    let mut line = pair_checks.line("tight-witness-matrix-pair");
    if pair_checks.bad == 0 {
        line.residual = format!(
            "{} hypotheses held, {nondegenerate} with nonzero sides, all conclusions exact",
            pair_checks.total - 1
        );
    }
    checks.push(line);
    checks
}

// ---------------------------------------------------------------------
// Radicals

pub fn criterion_radicals() -> Vec<CheckLine> {
    let mut checks = Vec::new();
    for kind in FAMILIES {
        let mut t = Tally::new();
        for m in 2..=6 {
            let got = Presentation::family(kind, m)
                .and_then(StructureTable::build)
                .map(|tab| tab.radical_dimension());
            let want = family_radical_dimension(kind, m);
            t.hit(matches!(got, Ok(v) if v == want), || {
                format!("m={m}: radical {got:?} != {want}")
            });
        }
        checks.push(t.line(format!("radical-{}-m2..6", kind.name())));
    }
    checks
}

// ---------------------------------------------------------------------
// Closed-form Drazin inverses

pub fn criterion_closed_form_drazin() -> Vec<CheckLine> {
    let alphas = [int(1), int(2), int(-2), rat(1, 3), int(-1)];
    let mut checks = Vec::new();
    for kind in FAMILIES {
        for m in 2..=4 {
            let mut t = Tally::new();
            let outcome = (|| -> idempair_core::Result<()> {
                let pres = Presentation::family(kind, m)?;
                let table = StructureTable::build(pres)?;
                for alpha in &alphas {
                    let a = Element::from_profile(pres, std::slice::from_ref(alpha), &[int(1)]);
                    let closed = closed_form_drazin_alpha_pq(&table, m, alpha)?;
                    let direct = algebra_drazin(&table, &a)?;
                    t.hit(closed.inverse == direct.inverse, || {
                        format!("alpha={alpha}: closed form differs from direct route")
                    });
                    t.hit(closed.index == direct.index, || {
                        format!("alpha={alpha}: index {} != {}", closed.index, direct.index)
                    });
                    t.hit(closed.checks.all(), || {
                        format!("alpha={alpha}: axiom checks failed")
                    });
                    let cap = if *alpha == int(-1) { 3 } else { 2 };
                    t.hit(closed.index <= cap, || {
                        format!("alpha={alpha}: index {} above {cap}", closed.index)
                    });
                }
                Ok(())
            })();
            if let Err(e) = outcome {
                t.hit(false, || format!("error: {e}"));
            }
            checks.push(t.line(format!("closed-form-{}-m{m}", kind.name())));
        }
    }
    checks
}

pub fn criterion_lambda_formulas() -> Vec<CheckLine> {
    let lambdas = [int(2), int(-1), rat(1, 2), int(3)];
    let alphas = [int(1), int(-1), int(2)];
    let mut checks = Vec::new();
    for m in 2..=3 {
        let mut t = Tally::new();
        let outcome = (|| -> idempair_core::Result<()> {
            for lambda in &lambdas {
                let spec = LambdaSpec::new(m, lambda.clone())?;
                let pair = build_lambda_pair(&spec)?;
                for alpha in &alphas {
                    let (_, result) = closed_form_group_lambda(&pair, &spec, alpha)?;
                    t.hit(result.checks.all(), || {
                        format!("lambda={lambda} alpha={alpha}: group axioms failed")
                    });
                    t.hit(result.index == 1, || {
                        format!("lambda={lambda} alpha={alpha}: index != 1")
                    });
                    let a = pair.p().scale(alpha).add(pair.q());
                    let oracle = matrix_drazin(&a);
                    t.hit(result.inverse == oracle.inverse, || {
                        format!("lambda={lambda} alpha={alpha}: differs from matrix route")
                    });
                    t.hit(oracle.index <= 1, || {
                        format!("lambda={lambda} alpha={alpha}: oracle index above 1")
                    });
                }
            }
            Ok(())
        })();
        if let Err(e) = outcome {
            t.hit(false, || format!("error: {e}"));
        }
        checks.push(t.line(format!("lambda-formula-m{m}")));
    }
    checks
}

/// Suite-only reinforcement: the algebra route agrees with the matrix
/// route on random elements, and the Drazin inverse is idempotent under
/// double application in the usual triple-inverse sense.
pub fn drazin_random_agreement(seed: u64) -> Vec<CheckLine> {
    let mut sampler = Sampler::new(seed);
    let mut checks = Vec::new();
    for kind in FAMILIES {
        for m in 2..=3 {
            let mut t = Tally::new();
            let outcome = (|| -> idempair_core::Result<()> {
                let pres = Presentation::family(kind, m)?;
                let table = StructureTable::build(pres)?;
                let pair = build_family_pair(kind, m)?;
                for i in 0..50 {
                    let (xs, ys) = sampler.profile(2 * m);
                    let a = Element::from_profile(pres, &xs, &ys);
                    let via_algebra = algebra_drazin(&table, &a)?;
                    let m_a = pair.represent_element(&a);
                    let via_matrix = matrix_drazin(&m_a);
                    t.hit(
                        pair.represent_element(&via_algebra.inverse) == via_matrix.inverse,
                        || format!("sample {i}: routes disagree"),
                    );
                    let dd = algebra_drazin(&table, &via_algebra.inverse)?;
                    let ddd = algebra_drazin(&table, &dd.inverse)?;
                    t.hit(ddd.inverse == via_algebra.inverse, || {
                        format!("sample {i}: triple inverse drifted")
                    });
                }
                Ok(())
            })();
            if let Err(e) = outcome {
                t.hit(false, || format!("error: {e}"));
            }
            checks.push(t.line(format!("drazin-routes-{}-m{m}", kind.name())));
        }
    }
    checks
}

// ---------------------------------------------------------------------
// Classifier sweeps

const SWEEP_CHAIN_LENGTHS: core::ops::RangeInclusive<usize> = 3..=12;
const SWEEP_SAMPLES: usize = 500;
const SWEEP_MAX_LEN: usize = 8;

struct SettingModel {
    images_p: Vec<RationalMatrix>,
    images_q: Vec<RationalMatrix>,
    size: usize,
}

impl SettingModel {
    fn new(pair: &ModelPair) -> SettingModel {
        let (images_p, images_q) = pair.word_images(SWEEP_MAX_LEN);
        SettingModel {
            images_p,
            images_q,
            size: pair.size(),
        }
    }

    fn represent(&self, xs: &[BigRational], ys: &[BigRational]) -> RationalMatrix {
        let mut acc = RationalMatrix::zeros(self.size, self.size);
        for (c, img) in xs.iter().zip(&self.images_p) {
            if !c.is_zero() {
                acc = acc.add(&img.scale(c));
            }
        }
        for (c, img) in ys.iter().zip(&self.images_q) {
            if !c.is_zero() {
                acc = acc.add(&img.scale(c));
            }
        }
        acc
    }
}

#[derive(Clone, Copy)]
enum Setting {
    Chain { m: usize, unit: bool },
    WithW3 { m: usize },
    WithW4 { m: usize },
}

impl Setting {
    fn all() -> Vec<Setting> {
        let mut v = Vec::new();
        for m in SWEEP_CHAIN_LENGTHS {
            v.push(Setting::Chain { m, unit: false });
            v.push(Setting::Chain { m, unit: true });
        }
        for m in SWEEP_CHAIN_LENGTHS {
            v.push(Setting::WithW3 { m });
        }
        for m in SWEEP_CHAIN_LENGTHS {
            v.push(Setting::WithW4 { m });
        }
        v
    }

    fn name(&self) -> String {
        match *self {
            Setting::Chain { m, unit } => {
                format!("zm-m{m}-{}", if unit { "unital" } else { "nonunital" })
            }
            Setting::WithW3 { m } => format!("zm-w3-m{m}"),
            Setting::WithW4 { m } => format!("zm-w4-m{m}"),
        }
    }

    fn pair(&self) -> idempair_core::Result<ModelPair> {
        match *self {
            Setting::Chain { m, unit } => build_zn_pair(m, OddZero::QpZero, unit),
            Setting::WithW3 { m } => build_zw3_pair(m, OddZero::QpZero),
            Setting::WithW4 { m } => build_zw4_pair(m, OddZero::QpZero),
        }
    }

    fn classify(&self, profile: &CoefficientProfile) -> idempair_core::Result<Verdict> {
        match *self {
            Setting::Chain { m, unit } => classify_zm(profile, m, unit),
            Setting::WithW3 { m } => classify_zm_w3(profile, m),
            Setting::WithW4 { m } => classify_zm_w4(profile, m),
        }
    }

    fn unit_in_span(&self) -> bool {
        matches!(*self, Setting::Chain { unit: true, .. })
    }
}

/// Theorem-decided verdicts versus the rank oracle, across every setting.
pub fn criterion_classifier_oracle(seed: u64) -> Vec<CheckLine> {
    classifier_sweep(seed, false)
}

/// Asserted spectra versus the minimal-polynomial oracle on the models,
/// for the decided profiles of the same sweep.
pub fn criterion_spectrum_agreement(seed: u64) -> Vec<CheckLine> {
    classifier_sweep(seed, true)
}

fn classifier_sweep(seed: u64, spectra: bool) -> Vec<CheckLine> {
    let mut sampler = Sampler::new(seed);
    let mut checks = Vec::new();
    for setting in Setting::all() {
        let mut t = Tally::new();
        let mut decided = 0usize;
        let outcome = (|| -> idempair_core::Result<()> {
            let model = SettingModel::new(&setting.pair()?);
            for i in 0..SWEEP_SAMPLES {
                let (xs, ys) = sampler.profile(SWEEP_MAX_LEN);
                let profile = CoefficientProfile::new(xs, ys);
                let verdict = setting.classify(&profile)?;
                if !verdict.decided_by_theorem {
                    continue;
                }
                decided += 1;
                let mat = model.represent(profile.xs(), profile.ys());
                if spectra {
                    let found = matrix_spectrum(&mat);
                    t.hit(found.complete && found.values == verdict.spectrum, || {
                        format!(
                            "sample {i}: spectrum {:?} complete={} vs asserted {:?}",
                            found.values, found.complete, verdict.spectrum
                        )
                    });
                } else {
                    t.hit(
                        verdict.group_invertible() == rank_group_invertible(&mat),
                        || format!("sample {i}: group invertibility disagrees with ranks"),
                    );
                    t.hit(
                        verdict.properly_group_invertible()
                            == rank_properly_group_invertible(&mat, setting.unit_in_span()),
                        || format!("sample {i}: proper group invertibility disagrees"),
                    );
                    t.hit(
                        matches!(verdict.kind, VerdictKind::Invertible)
                            == (mat.rank() == model.size),
                        || format!("sample {i}: invertibility disagrees with full rank"),
                    );
                }
            }
            Ok(())
        })();
        if let Err(e) = outcome {
            t.hit(false, || format!("error: {e}"));
        }
        let prefix = if spectra { "spectrum" } else { "classifier-oracle" };
        let mut line = t.line(format!("{prefix}-{}", setting.name()));
        if t.bad == 0 {
            line.residual = format!("{decided}/{SWEEP_SAMPLES} decided, all checks exact");
        }
        checks.push(line);
    }
    checks
}

// ---------------------------------------------------------------------
// Index bounds

pub fn criterion_index_bounds(seed: u64) -> Vec<CheckLine> {
    let mut sampler = Sampler::new(seed);
    let mut checks = Vec::new();
    for m in SWEEP_CHAIN_LENGTHS {
        let mut t = Tally::new();
        let outcome = (|| -> idempair_core::Result<()> {
            let pres = Presentation::zn(m, OddZero::QpZero)?;
            let table = StructureTable::build(pres)?;
            let horizon = pres.max_order(Gen::P).max(pres.max_order(Gen::Q));
            for i in 0..SWEEP_SAMPLES {
                let nilpotent = i % 2 == 0;
                let (mut xs, mut ys) = sampler.profile(horizon);
                if nilpotent {
                    if !xs.is_empty() {
                        xs[0] = BigRational::zero();
                    }
                    if !ys.is_empty() {
                        ys[0] = BigRational::zero();
                    }
                } else {
                    let lead = sampler.nonzero_coeff();
                    if xs.is_empty() {
                        xs.push(lead);
                    } else {
                        xs[0] = lead;
                    }
                }
                let a = Element::from_profile(pres, &xs, &ys);
                let idx = matrix_index(&table.left_mul_matrix_unitalized(&a)?);
                let bound = index_bound(m, nilpotent);
                t.hit(idx <= bound, || {
                    format!("sample {i}: index {idx} above bound {bound}")
                });
            }
            // The bound is exercised nontrivially: pq is nilpotent with
            // index above one at every one of these lengths.
            let pq = Element::from_profile(pres, &[int(0), int(1)], &[]);
            let idx = matrix_index(&table.left_mul_matrix_unitalized(&pq)?);
            t.hit(idx > 1 && idx <= index_bound(m, true), || {
                format!("pq index {idx} not in (1, {}]", index_bound(m, true))
            });
            Ok(())
        })();
        if let Err(e) = outcome {
            t.hit(false, || format!("error: {e}"));
        }
        checks.push(t.line(format!("index-bound-m{m}")));
    }
    checks
}

// ---------------------------------------------------------------------
// Zero-multiplicity comparison

pub fn criterion_countzero(seed: u64) -> Vec<CheckLine> {
    let mut sampler = Sampler::new(seed);
    let mut t = Tally::new();
    for i in 0..10_000 {
        let (xs, mut ys) = sampler.profile(10);
        if !ys.is_empty() {
            ys[0] = BigRational::zero();
        }
        let profile = CoefficientProfile::new(xs, ys);
        let b = psi_bundle(&profile);
        let m0 = b.psi.root_zero_multiplicity();
        let m1 = b.psi1.root_zero_multiplicity();
        let m2 = b.psi2.root_zero_multiplicity();
        t.hit(m0 <= m1.min(m2), || {
            format!("sample {i}: mult {m0:?} above min({m1:?}, {m2:?})")
        });
    }
    vec![t.line("countzero-random-profiles")]
}

// ---------------------------------------------------------------------
// Pinned example regression

pub fn criterion_example_regression() -> Vec<CheckLine> {
    let mut checks = Vec::new();
    let pair = pinned_z3_pair();
    let qp = pair.q().mul(pair.p());
    checks.push(CheckLine::new(
        "example-qp-vanishes",
        qp.is_zero(),
        if qp.is_zero() { "exact" } else { "q*p != 0" }.to_string(),
    ));
    let sum = pair.p().add(pair.q());
    let r1 = sum.rank();
    let r2 = sum.mul(&sum).rank();
    checks.push(CheckLine::new(
        "example-sum-rank-stable",
        r1 == 2 && r2 == 2,
        format!("rank {r1}, squared rank {r2}"),
    ));
    let pres = Presentation::zn(3, OddZero::QpZero).expect("n = 3");
    let in_span = ambient_unit_in_span(&pair, &pres);
    checks.push(CheckLine::new(
        "example-ambient-unit-outside-span",
        !in_span,
        if in_span { "identity in span" } else { "exact" }.to_string(),
    ));
    let unit_check = (|| -> idempair_core::Result<bool> {
        let table = StructureTable::build(pres)?;
        let unit = table
            .internal_unit()
            .ok_or_else(|| idempair_core::Error::ConstructionFailure("no internal unit".into()))?;
        let image = pair.represent_element(&unit);
        let target = RationalMatrix::from_int_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        Ok(image == target)
    })();
    checks.push(CheckLine::new(
        "example-internal-unit-matrix",
        unit_check.as_ref().copied().unwrap_or(false),
        match unit_check {
            Ok(true) => "exact".to_string(),
            Ok(false) => "internal unit image differs".to_string(),
            Err(e) => format!("error: {e}"),
        },
    ));
    checks
}

// ---------------------------------------------------------------------
// Suite dispatch

pub const SUITE_NAMES: [&str; 7] = [
    "dims",
    "radical",
    "drazin",
    "classify",
    "index",
    "countzero",
    "all",
];

/// Runs one named suite; `lap` is called with a step label after each
/// criterion so the caller can record timings.
pub fn run_suite(
    name: &str,
    seed: u64,
    lap: &mut dyn FnMut(&str),
) -> Result<Vec<CheckLine>, String> {
    let mut checks = Vec::new();
    match name {
        "dims" => {
            checks.extend(criterion_dimensions());
            lap("dimensions");
            checks.extend(criterion_tight_witnesses());
            lap("tight-witnesses");
        }
        "radical" => {
            checks.extend(criterion_radicals());
            lap("radicals");
        }
        "drazin" => {
            checks.extend(criterion_closed_form_drazin());
            lap("closed-form");
            checks.extend(criterion_lambda_formulas());
            lap("lambda-formulas");
            checks.extend(drazin_random_agreement(seed));
            lap("random-agreement");
        }
        "classify" => {
            checks.extend(criterion_classifier_oracle(seed));
            lap("classifier-oracle");
            checks.extend(criterion_spectrum_agreement(seed));
            lap("spectra");
            checks.extend(criterion_example_regression());
            lap("example");
        }
        "index" => {
            checks.extend(criterion_index_bounds(seed));
            lap("index-bounds");
        }
        "countzero" => {
            checks.extend(criterion_countzero(seed));
            lap("countzero");
        }
        "all" => {
            for sub in SUITE_NAMES.iter().filter(|s| **s != "all") {
                checks.extend(run_suite(sub, seed, lap)?);
            }
        }
        other => {
            return Err(format!(
                "unknown suite {other:?}; expected one of {SUITE_NAMES:?}"
            ))
        }
    }
    Ok(checks)
}
