//! Per-entry verification battery.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{stabilizer_embed, Params, SeriesEntry};
use crate::charts::grassmannian_dim;
use crate::error::Result;
use crate::involutions::groups::{centralizer_identities_check, random_invertible, GroupName};
use crate::involutions::{detect_mu, managing_type, ConsistentPair};
use crate::matrix::Matrix;
use crate::spaces::{all_labels, component_index, contains, label_representative, SpacePoint};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    /// group elements sampled per action check
    pub trials: usize,
    /// samples for the three descriptions of `U^J(B)`
    pub identity_samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { trials: 20, identity_samples: 100, seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub id: usize,
    pub params: Params,
    pub title: String,
    pub checks: Vec<CheckResult>,
    pub notes: Vec<String>,
}

impl EntryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let info = super::entry_info(self.id).expect("valid id");
        writeln!(
            f,
            "entry {} [{}] {}: {}",
            self.id,
            self.params.render(info.schema),
            self.title,
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for c in &self.checks {
            writeln!(f, "  {:<24} {}  {}", c.name, if c.passed { "ok  " } else { "FAIL" }, c.detail)?;
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

/// `splitmix64` finalizer, used to derive per-instance seeds.
pub fn mix_seed(seed: u64, id: usize, params: &Params) -> u64 {
    let mut x = seed ^ (id as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15);
    for v in [params.n, params.p, params.q, params.r, params.s, params.k, params.l, params.m] {
        x = splitmix(x ^ v as u64);
    }
    x
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Checks(Vec<CheckResult>);

impl Checks {
    fn push(&mut self, name: &'static str, passed: bool, detail: impl Into<String>) {
        self.0.push(CheckResult { name, passed, detail: detail.into() });
    }

    fn push_result(&mut self, name: &'static str, r: Result<(bool, String)>) {
        match r {
            Ok((passed, detail)) => self.push(name, passed, detail),
            Err(e) => self.push(name, false, format!("error: {e}")),
        }
    }
}

fn names_match(listed: &[GroupName], computed: &[GroupName]) -> bool {
    listed.len() == computed.len() && listed.iter().zip(computed).all(|(a, b)| a.same_as(*b))
}

fn show(names: &[GroupName]) -> String {
    crate::involutions::groups::product_name(names)
}

/// Run every applicable check on one instantiated entry.
pub fn verify_entry(e: &SeriesEntry, opts: &VerifyOptions) -> EntryReport {
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(opts.seed, e.id, &e.params));
    let mut checks = Checks(Vec::new());
    let base = SpacePoint::base(e);

    checks.push_result("base point", contains(e, &base).map(|ok| (ok, "o = (Q1, Q2) is a member".into())));
    checks.push_result("group action", action_check(e, opts, &mut rng));

    if e.list == 1 {
        checks.push_result("mu", mu_check(e));
        checks.push_result("managing form", managing_check(e));
    }
    if e.glj.is_some() {
        checks.push_result("centralizer species", centralizer_check(e));
    }
    checks.push_result("named dimensions", Ok(named_dims_check(e)));
    if e.list == 1 {
        checks.push_result("U^J(B) identities", identities_check(e, opts, &mut rng));
        checks.push_result("stabilizer", stabilizer_check(e, opts, &mut rng));
        checks.push_result("isotropy lemmas", lemma_check(e, opts, &mut rng));
    }
    let gr = grassmannian_dim(e);
    let (dg, dh) = (e.g.lie_algebra_dim(), e.h.lie_algebra_dim());
    checks.push(
        "dimension identity",
        dg >= dh && dg - dh == gr,
        format!("dim G - dim H = {dg} - {dh}, chart dimension {gr}"),
    );
    if e.star {
        checks.push_result("component labels", label_check(e, opts, &mut rng));
    }
    EntryReport { id: e.id, params: e.params, title: e.title(), checks: checks.0, notes: e.notes.clone() }
}

fn action_check(e: &SeriesEntry, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let base = SpacePoint::base(e);
    let base_label = if e.star { Some(component_index(e, &base)?) } else { None };
    for t in 0..opts.trials {
        let g = e.g.cayley_sample(rng)?;
        if !e.g.contains(&g) {
            return Ok((false, format!("sample {t} is not in G")));
        }
        let pt = base.image(&g);
        if !contains(e, &pt)? {
            return Ok((false, format!("g·o leaves the space at sample {t}")));
        }
        if let Some(label) = base_label {
            if component_index(e, &pt)? != label {
                return Ok((false, format!("g·o changes component at sample {t}")));
            }
        }
        if matches!(e.list, 2 | 5) {
            let g2 = e.g.cayley_sample(rng)?;
            if !e.g_star.contains(&Matrix::block_diag(&[&g, &g2])) {
                return Ok((false, format!("(g1, g2) is not in G* at sample {t}")));
            }
        }
    }
    Ok((true, format!("{} sampled g ∈ {} keep o in the space", opts.trials, e.g.name())))
}

fn mu_check(e: &SeriesEntry) -> Result<(bool, String)> {
    let (b, j) = (e.form_b.as_ref().expect("B"), e.semiinv.as_ref().expect("J"));
    let mu = detect_mu(b, j)?;
    let listed = e.listed_mu.expect("List 1 μ");
    Ok((mu == listed, format!("computed mu = {mu}, listed {listed}")))
}

fn managing_check(e: &SeriesEntry) -> Result<(bool, String)> {
    let (b, j) = (e.form_b.as_ref().expect("B"), e.semiinv.as_ref().expect("J"));
    let pair = ConsistentPair::new(b.clone(), j.clone())?;
    let d = pair.managing_form()?;
    let predicted = managing_type(b.form_type(), j.linearity(), j.epsilon(), pair.mu)?;
    let recovered = &pair.recovered_gram(&d) == b.gram();
    let computed = GroupName::of_form(&d);
    let ud = e.ud.as_ref().expect("U(D)");
    let ok = predicted == d.form_type() && recovered && names_match(&ud.names, &[computed]);
    Ok((
        ok,
        format!(
            "D is {} ({}), U(D) = {computed}, listed {}{}",
            d.form_type(),
            if predicted == d.form_type() { "as predicted" } else { "type mismatch" },
            ud.name(),
            if recovered { "" } else { ", B not recovered from D" }
        ),
    ))
}

fn centralizer_check(e: &SeriesEntry) -> Result<(bool, String)> {
    let j = e.semiinv.as_ref().expect("J");
    let glj = e.glj.as_ref().expect("GL^J");
    let computed = GroupName::of_centralizer(j)?;
    let species = j.species()?;
    let lie = glj.lie_algebra_dim();
    let ok = names_match(&glj.names, &computed) && lie == glj.named_dim();
    Ok((
        ok,
        format!(
            "species {species:?}: GL^J = {}, listed {}, Lie algebra dimension {lie}",
            show(&computed),
            glj.name()
        ),
    ))
}

fn named_dims_check(e: &SeriesEntry) -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for (label, g) in [("G", &e.g), ("H", &e.h), ("G*", &e.g_star)] {
        let (lie, named) = (g.lie_algebra_dim(), g.named_dim());
        ok &= lie == named;
        parts.push(format!("{label} {lie}/{named}"));
    }
    (ok, format!("Lie/named: {}", parts.join(", ")))
}

fn identities_check(e: &SeriesEntry, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let (b, j) = (e.form_b.as_ref().expect("B"), e.semiinv.as_ref().expect("J"));
    let d = e.managing.as_ref().expect("D");
    let sources = [&e.g, &e.g_star, e.glj.as_ref().expect("GL^J"), e.ud.as_ref().expect("U(D)")];
    let mut samples = Vec::with_capacity(opts.identity_samples);
    for k in 0..opts.identity_samples {
        let g = match k % 5 {
            4 => random_invertible(rng, e.ring, e.dim),
            i => sources[i].cayley_sample(rng)?,
        };
        samples.push(g);
    }
    let report = centralizer_identities_check(b, j, d, &samples);
    Ok((
        report.passed(),
        format!(
            "{} samples, {} in U^J(B), {} disagreements",
            report.checked,
            report.members,
            report.counterexamples.len()
        ),
    ))
}

fn stabilizer_check(e: &SeriesEntry, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let base = SpacePoint::base(e);
    for t in 0..opts.trials {
        let h1 = e.h.cayley_sample(rng)?;
        let g = stabilizer_embed(e, &h1)?;
        if !e.g.contains(&g) || base.image(&g) != base {
            return Ok((false, format!("embedded sample {t} is not in the stabilizer")));
        }
    }
    Ok((true, format!("{} elements of U(D') extend to stabilizers of o", opts.trials)))
}

fn lemma_check(e: &SeriesEntry, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let (b, j) = (e.form_b.as_ref().expect("B"), e.semiinv.as_ref().expect("J"));
    let d = e.managing.as_ref().expect("D");
    for t in 0..opts.trials {
        let g = e.g_star.cayley_sample(rng)?;
        let p = e.base.0.image(&g);
        if !b.is_isotropic(&p) {
            return Ok((false, format!("g·Q1 is not isotropic at sample {t}")));
        }
        if j.apply_subspace(&p) != d.orthogonal_complement(&p) {
            return Ok((false, format!("J·P differs from the D-orthogonal of P at sample {t}")));
        }
        let k = rng.gen_range(1..=p.dim());
        let mix = crate::involutions::groups::random_matrix(rng, e.ring, p.dim(), k, 2);
        let u = Subspace::canonicalize(&(p.basis() * &mix));
        if !b.is_isotropic(&j.apply_subspace(&u)) {
            return Ok((false, format!("J·U is not isotropic at sample {t}")));
        }
    }
    Ok((true, format!("{} maximal isotropic P = g·Q1 with g ∈ U(B)", opts.trials)))
}

fn label_check(e: &SeriesEntry, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<(bool, String)> {
    let wanted = all_labels(e)?;
    let mut realized = Vec::new();
    for &label in &wanted {
        let pt = label_representative(e, label)?;
        if !contains(e, &pt)? || component_index(e, &pt)? != label {
            return Ok((false, format!("representative of {label} is not a point with that label")));
        }
        for t in 0..opts.trials {
            let g = e.g.cayley_sample(rng)?;
            if component_index(e, &pt.image(&g))? != label {
                return Ok((false, format!("label {label} changes under sample {t}")));
            }
        }
        realized.push(label.to_string());
    }
    Ok((true, format!("realized and G-stable: {}", realized.join(" "))))
}
