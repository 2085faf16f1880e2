//! The registry of the 54 series and their canonical constructions.
//!
//! List 1 entries use one model for every series: `V = K^{2m}` with the
//! exchange semiinvolution `J = [[0, εI], [I, 0]]` (composed with
//! conjugation when antilinear) and `B = [[0, s·K†], [K, 0]]`, where `K` is
//! the Gram matrix of the restricted managing form `D'` and `s` the symmetry
//! sign of `B`. The base point is the pair of coordinate halves.

mod table;
pub mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use table::{entry_info, EntryInfo, Schema, ALL_IDS, STAR_IDS};
pub use verify::{verify_entry, CheckResult, EntryReport, VerifyOptions};

use crate::error::{Error, Result};
use crate::forms::{Form, FormKind, FormType};
use crate::involutions::groups::{GroupData, GroupDescriptor, GroupName};
use crate::involutions::{managing_type, ConsistentPair, Linearity, Semiinvolution};
use crate::matrix::Matrix;
use crate::scalar::{Ring, Scalar};
use crate::subspace::Subspace;

/// Series parameters; each entry reads the fields named by its [`Schema`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "is_zero")]
    pub n: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub p: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub q: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub r: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub s: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub k: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub l: usize,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub m: usize,
}

fn is_zero(x: &usize) -> bool {
    *x == 0
}

impl Params {
    pub fn n(n: usize) -> Params {
        Params { n, ..Params::default() }
    }

    pub fn pq(p: usize, q: usize) -> Params {
        Params { p, q, ..Params::default() }
    }

    pub fn pqrs(p: usize, q: usize, r: usize, s: usize) -> Params {
        Params { p, q, r, s, ..Params::default() }
    }

    pub fn kl(k: usize, l: usize) -> Params {
        Params { k, l, ..Params::default() }
    }

    pub fn nm(n: usize, m: usize) -> Params {
        Params { n, m, ..Params::default() }
    }

    /// Only the fields used by `schema`, rendered `n=2` or `p=1, q=1`.
    pub fn render(&self, schema: Schema) -> String {
        schema
            .fields()
            .iter()
            .map(|&f| format!("{f}={}", self.get(f)))
            .collect::<Vec<_>>()
            .join(", ")
    }

    pub fn get(&self, field: &str) -> usize {
        match field {
            "n" => self.n,
            "p" => self.p,
            "q" => self.q,
            "r" => self.r,
            "s" => self.s,
            "k" => self.k,
            "l" => self.l,
            "m" => self.m,
            _ => 0,
        }
    }

    /// A copy keeping only the fields of `schema`.
    pub fn restricted(&self, schema: Schema) -> Params {
        let mut out = Params::default();
        for &f in schema.fields() {
            let v = self.get(f);
            match f {
                "n" => out.n = v,
                "p" => out.p = v,
                "q" => out.q = v,
                "r" => out.r = v,
                "s" => out.s = v,
                "k" => out.k = v,
                "l" => out.l = v,
                _ => out.m = v,
            }
        }
        out
    }
}

/// An instantiated series: structures, groups and the base point.
#[derive(Clone, Debug)]
pub struct SeriesEntry {
    pub id: usize,
    pub list: u8,
    pub params: Params,
    pub star: bool,
    pub ring: Ring,
    pub dim: usize,
    pub form_b: Option<Form>,
    pub semiinv: Option<Semiinvolution>,
    /// `μ` printed in the entry (List 1)
    pub listed_mu: Option<i64>,
    /// the managing form: computed from `(B, J)` on List 1, given on List 4
    pub managing: Option<Form>,
    pub g: GroupDescriptor,
    pub g_star: GroupDescriptor,
    pub glj: Option<GroupDescriptor>,
    pub ud: Option<GroupDescriptor>,
    pub h: GroupDescriptor,
    pub base: (Subspace, Subspace),
    pub notes: Vec<String>,
}

impl SeriesEntry {
    pub fn info(&self) -> &'static EntryInfo {
        entry_info(self.id).expect("built entries have valid ids")
    }

    /// `G/H` with the instantiated parameters.
    pub fn title(&self) -> String {
        format!("{}/{}", self.g.name(), self.h.name())
    }

    /// Mark the stored `U(D)` column with a wrong group, for negative tests
    /// of the verification battery.
    pub fn corrupt_ud_tag(&mut self) {
        if let Some(ud) = &mut self.ud {
            let bogus = match ud.names[0] {
                GroupName::SpR(m) => GroupName::O(m, 0),
                _ => GroupName::SpR(2 * self.dim),
            };
            ud.names = vec![bogus];
        }
    }

    /// `D` restricted to `Q₁` of the base point.
    pub fn restricted_managing(&self) -> Option<Form> {
        self.managing.as_ref().and_then(|d| d.restrict(&self.base.0).ok())
    }
}

impl fmt::Display for SeriesEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let info = self.info();
        writeln!(
            f,
            "{}{}. {}    [{}]",
            self.id,
            if self.star { "*" } else { "" },
            self.title(),
            self.params.render(info.schema)
        )?;
        let mut line = format!("V = {}^{}", self.ring, self.dim);
        if let Some(b) = &self.form_b {
            line.push_str(&format!(", B is {}", kind_word(b.kind())));
        }
        if let Some(j) = &self.semiinv {
            line.push_str(&format!(
                ", J is {}, J^2 = {}",
                if j.is_antilinear() { "antilinear" } else { "linear" },
                j.epsilon()
            ));
        }
        if let Some(mu) = self.listed_mu {
            line.push_str(&format!(", mu = {mu}"));
        }
        if self.list == 4 {
            if let Some(d) = &self.managing {
                line.push_str(&format!(", D is {}", kind_word(d.kind())));
            }
        }
        writeln!(f, "{line}")?;
        writeln!(f, "G* = {}", self.g_star.name())?;
        let mut fourth = Vec::new();
        if let Some(glj) = &self.glj {
            fourth.push(format!("GL^J = {}", glj.name()));
        }
        if let Some(ud) = &self.ud {
            fourth.push(format!("U(D) = {}", ud.name()));
        }
        if !fourth.is_empty() {
            writeln!(f, "{}", fourth.join(", "))?;
        }
        if let Some(u) = info.union {
            writeln!(f, "S = {u}")?;
        }
        for note in &self.notes {
            writeln!(f, "note: {note}")?;
        }
        Ok(())
    }
}

fn kind_word(kind: FormKind) -> &'static str {
    match kind {
        FormKind::Symmetric => "symmetric",
        FormKind::Skew => "skew-symmetric",
        FormKind::Hermitian => "hermitian",
        FormKind::Antihermitian => "antihermitian",
    }
}

/// Instantiate series `id` at `params`.
pub fn build(id: usize, params: Params) -> Result<SeriesEntry> {
    let info = entry_info(id).ok_or(Error::UnknownEntry(id))?;
    let params = params.restricted(info.schema);
    info.validate(&params)?;
    match info.list {
        1 => build_list1(info, params),
        2 => build_list2(info, params),
        3 => build_list3(info, params),
        4 => build_list4(info, params),
        _ => build_list5(info, params),
    }
}

/// Every valid parameter choice with `dim_K V ≤ max_dim`.
pub fn enumerate_params(id: usize, max_dim: usize) -> Result<Vec<Params>> {
    let info = entry_info(id).ok_or(Error::UnknownEntry(id))?;
    let mut out = Vec::new();
    let range = 0..=max_dim;
    match info.schema {
        Schema::N => {
            for n in 1..=max_dim {
                out.push(Params::n(n));
            }
        }
        Schema::PQ => {
            for p in range.clone() {
                for q in range.clone() {
                    out.push(Params::pq(p, q));
                }
            }
        }
        Schema::PQRS => {
            for p in range.clone() {
                for q in range.clone() {
                    for r in 0..=p {
                        for s in 0..=q {
                            out.push(Params::pqrs(p, q, r, s));
                        }
                    }
                }
            }
        }
        Schema::KL => {
            for k in 1..=max_dim {
                for l in 1..=max_dim {
                    out.push(Params::kl(k, l));
                }
            }
        }
        Schema::NM | Schema::MN => {
            for n in 1..=max_dim {
                for m in 1..=max_dim {
                    out.push(Params::nm(n, m));
                }
            }
        }
    }
    out.retain(|p| info.validate(p).is_ok() && info.ambient_dim(p) <= max_dim);
    Ok(out)
}

/// Gram matrix of the model form of type `t` on `K^m`; types with inertia
/// get signature `(a, m − a)`.
pub fn model_gram(t: FormType, m: usize, a: usize) -> Result<Matrix> {
    let ring = t.ring;
    let signs = || {
        let d: Vec<Scalar> = (0..m)
            .map(|k| Scalar::from_i64(ring, if k < a { 1 } else { -1 }))
            .collect();
        Matrix::diagonal(ring, &d)
    };
    Ok(match (ring, t.kind) {
        (_, FormKind::Skew) => {
            if !m.is_multiple_of(2) {
                return Err(Error::BadParams(format!("skew form on K^{m}")));
            }
            Form::hyperbolic(ring, FormKind::Skew, m / 2)?.gram().clone()
        }
        (Ring::C, FormKind::Symmetric) => Matrix::identity(ring, m),
        (_, FormKind::Symmetric) | (_, FormKind::Hermitian) => signs(),
        (Ring::C, FormKind::Antihermitian) => signs().scale_left(&-Scalar::i()),
        (_, FormKind::Antihermitian) => Matrix::scalar(m, &Scalar::j()),
    })
}

/// Data of a List 1 entry.
#[derive(Clone, Copy, Debug)]
pub struct List1Data {
    pub ring: Ring,
    pub b: FormKind,
    pub linearity: Linearity,
    pub epsilon: i64,
    pub mu: i64,
}

/// `(B, J)` and the split of `V` for a List 1 model with `D'` of signature
/// `(a, m − a)` when `D'` has inertia.
pub fn list1_pair(data: &List1Data, m: usize, a: usize) -> Result<(Form, Semiinvolution)> {
    let ring = data.ring;
    let b_type = FormType::new(ring, data.b)?;
    let d_type = managing_type(b_type, data.linearity, data.epsilon, data.mu)?;
    let k = model_gram(d_type, m, a)?;
    let s = Scalar::from_i64(ring, data.b.sign());
    let top = k.adjoint(data.b.is_sesquilinear()).scale_right(&s);
    let z = Matrix::zeros(ring, m, m);
    let b = Form::new(ring, data.b, Matrix::from_blocks(&z, &top, &k, &z))?;
    let j = Semiinvolution::exchange(ring, data.linearity, data.epsilon, m)?;
    Ok((b, j))
}

fn halves(ring: Ring, n: usize, first: usize) -> (Subspace, Subspace) {
    let a: Vec<usize> = (0..first).collect();
    let b: Vec<usize> = (first..n).collect();
    (Subspace::coordinate(ring, n, &a), Subspace::coordinate(ring, n, &b))
}

fn build_list1(info: &'static EntryInfo, params: Params) -> Result<SeriesEntry> {
    let data = info.list1.expect("List 1 data");
    let m = info.half_dim(&params);
    // signature of D': (p, q) on the (p, q) series, definite on the ★ series
    let a = if info.schema == Schema::PQ { params.p } else { m };
    let (b, j) = list1_pair(&data, m, a)?;
    let pair = ConsistentPair::new(b.clone(), j.clone())?;
    let d = pair.managing_form()?;
    let ring = data.ring;
    let dim = 2 * m;
    let base = halves(ring, dim, m);
    let d_prime = d.restrict(&base.0)?;
    let names = info.names(&params);
    let mut notes = Vec::new();
    if let Some(note) = info.note {
        notes.push(note.to_string());
    }
    Ok(SeriesEntry {
        id: info.id,
        list: 1,
        params,
        star: info.star,
        ring,
        dim,
        listed_mu: Some(data.mu),
        g: GroupDescriptor::new(names.g, GroupData::FormCentralizer(b.clone(), j.clone())),
        g_star: GroupDescriptor::new(names.g_star, GroupData::Form(b.clone())),
        glj: Some(GroupDescriptor::new(names.glj, GroupData::Centralizer(j.clone()))),
        ud: Some(GroupDescriptor::new(names.ud, GroupData::Form(d.clone()))),
        h: GroupDescriptor::new(names.h, GroupData::Form(d_prime)),
        form_b: Some(b),
        semiinv: Some(j),
        managing: Some(d),
        base,
        notes,
    })
}

fn build_list2(info: &'static EntryInfo, params: Params) -> Result<SeriesEntry> {
    let ring = info.ring;
    let n = params.n;
    let kind = info.form_kind.expect("List 2 form kind");
    let b = if ring == Ring::H && kind == FormKind::Antihermitian {
        Form::antihermitian_quaternionic(2 * n)?
    } else {
        Form::hyperbolic(ring, kind, n)?
    };
    let (e, f) = b.split_basis()?;
    let base = (Subspace::canonicalize(&e), Subspace::canonicalize(&f));
    let names = info.names(&params);
    let g_data = GroupData::Form(b.clone());
    Ok(SeriesEntry {
        id: info.id,
        list: 2,
        params,
        star: false,
        ring,
        dim: 2 * n,
        form_b: Some(b),
        semiinv: None,
        listed_mu: None,
        managing: None,
        g: GroupDescriptor::new(names.g, g_data.clone()),
        g_star: GroupDescriptor::new(names.g_star, GroupData::Product(vec![g_data.clone(), g_data])),
        glj: None,
        ud: None,
        h: GroupDescriptor::new(names.h, GroupData::General { ring, n }),
        base,
        notes: Vec::new(),
    })
}

fn build_list3(info: &'static EntryInfo, params: Params) -> Result<SeriesEntry> {
    let ring = info.ring;
    let n = params.n;
    let (linearity, epsilon) = info.semiinv.expect("List 3 semiinvolution");
    let j = Semiinvolution::exchange(ring, linearity, epsilon, n)?;
    let base = halves(ring, 2 * n, n);
    let names = info.names(&params);
    Ok(SeriesEntry {
        id: info.id,
        list: 3,
        params,
        star: false,
        ring,
        dim: 2 * n,
        form_b: None,
        listed_mu: None,
        managing: None,
        g: GroupDescriptor::new(names.g, GroupData::Centralizer(j.clone())),
        g_star: GroupDescriptor::new(names.g_star, GroupData::General { ring, n: 2 * n }),
        glj: Some(GroupDescriptor::new(names.glj, GroupData::Centralizer(j.clone()))),
        ud: None,
        h: GroupDescriptor::new(names.h, GroupData::General { ring, n }),
        semiinv: Some(j),
        base,
        notes: Vec::new(),
    })
}

fn build_list4(info: &'static EntryInfo, params: Params) -> Result<SeriesEntry> {
    let ring = info.ring;
    let kind = info.form_kind.expect("List 4 form kind");
    let big_n = info.ambient_dim(&params);
    let (d, q1_idx): (Form, Vec<usize>) = match info.schema {
        Schema::PQRS => {
            let Params { p, q, r, s, .. } = params;
            let d = Form::signature(ring, p, q)?;
            let idx = (0..r).chain(p..p + s).collect();
            (d, idx)
        }
        Schema::KL => {
            let half = params.k + params.l;
            let d = Form::hyperbolic(ring, kind, half)?;
            let idx = (0..params.k).chain(half..half + params.k).collect();
            (d, idx)
        }
        _ => {
            // 47: (n, m) with Q₁ of dimension n; 51: (m, n) with Q₁ of dimension m
            let first = if info.schema == Schema::NM { params.n } else { params.m };
            let gram = model_gram(FormType::new(ring, kind)?, big_n, big_n)?;
            (Form::new(ring, kind, gram)?, (0..first).collect())
        }
    };
    let q2_idx: Vec<usize> = (0..big_n).filter(|i| !q1_idx.contains(i)).collect();
    let q1 = Subspace::coordinate(ring, big_n, &q1_idx);
    let q2 = Subspace::coordinate(ring, big_n, &q2_idx);
    debug_assert_eq!(d.orthogonal_complement(&q1), q2);
    let h_data = GroupData::Product(vec![
        GroupData::Form(d.restrict(&q1)?),
        GroupData::Form(d.restrict(&q2)?),
    ]);
    let names = info.names(&params);
    Ok(SeriesEntry {
        id: info.id,
        list: 4,
        params,
        star: info.star,
        ring,
        dim: big_n,
        form_b: None,
        semiinv: None,
        listed_mu: None,
        g: GroupDescriptor::new(names.g, GroupData::Form(d.clone())),
        g_star: GroupDescriptor::new(names.g_star, GroupData::General { ring, n: big_n }),
        glj: None,
        ud: None,
        h: GroupDescriptor::new(names.h, h_data),
        managing: Some(d),
        base: (q1, q2),
        notes: Vec::new(),
    })
}

fn build_list5(info: &'static EntryInfo, params: Params) -> Result<SeriesEntry> {
    let ring = info.ring;
    let (p, q) = (params.p, params.q);
    let n = p + q;
    let names = info.names(&params);
    let g_data = GroupData::General { ring, n };
    let mut notes = Vec::new();
    if let Some(note) = info.note {
        notes.push(note.to_string());
    }
    Ok(SeriesEntry {
        id: info.id,
        list: 5,
        params,
        star: false,
        ring,
        dim: n,
        form_b: None,
        semiinv: None,
        listed_mu: None,
        managing: None,
        g: GroupDescriptor::new(names.g, g_data.clone()),
        g_star: GroupDescriptor::new(names.g_star, GroupData::Product(vec![g_data.clone(), g_data])),
        glj: None,
        ud: None,
        h: GroupDescriptor::new(
            names.h,
            GroupData::Product(vec![GroupData::General { ring, n: p }, GroupData::General { ring, n: q }]),
        ),
        base: halves(ring, n, p),
        notes,
    })
}

/// Extend `h₁ ∈ U(D')` to `g = h₁ on Q₁, J·h₁·J⁻¹ on Q₂` (List 1 entries).
pub fn stabilizer_embed(e: &SeriesEntry, h1: &Matrix) -> Result<Matrix> {
    let (Some(j), Some(d_prime)) = (&e.semiinv, e.restricted_managing()) else {
        return Err(Error::MissingStructure("a managing semiinvolution and form"));
    };
    if e.list != 1 {
        return Err(Error::MissingStructure("a List 1 entry"));
    }
    if !d_prime.is_preserved_by(h1) {
        return Err(Error::NotInUDprime);
    }
    let u1 = e.base.0.basis();
    let u2 = j.apply(u1);
    let h1_twisted = if j.is_antilinear() { h1.conj() } else { h1.clone() };
    let images = Matrix::hstack(&[&(u1 * h1), &(&u2 * &h1_twisted)]);
    let frame = Matrix::hstack(&[u1, &u2]);
    Ok(&images * &frame.invert()?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_has_54_entries_and_10_stars() {
        assert_eq!(ALL_IDS.len(), 54);
        let stars: Vec<usize> = ALL_IDS.iter().copied().filter(|&id| entry_info(id).unwrap().star).collect();
        assert_eq!(stars, vec![3, 5, 14, 15, 20, 26, 30, 45, 49, 50]);
        assert_eq!(STAR_IDS, &stars[..]);
    }

    #[test]
    fn structures_per_list() {
        for id in ALL_IDS {
            let info = entry_info(id).unwrap();
            let p = enumerate_params(id, 4).unwrap()[0];
            let e = build(id, p).unwrap();
            let expected = match id {
                1..=30 => (true, true),
                31..=37 => (true, false),
                38..=44 => (false, true),
                _ => (false, false),
            };
            assert_eq!((e.form_b.is_some(), e.semiinv.is_some()), expected, "entry {id}");
            assert_eq!(e.list, info.list);
            assert_eq!(e.managing.is_some(), matches!(id, 1..=30 | 45..=51));
        }
    }

    #[test]
    fn entry_8_at_p_q_1() {
        let e = build(8, Params::pq(1, 1)).unwrap();
        assert_eq!(e.title(), "U(1, 1)/O(1, 1)");
        assert_eq!((e.ring, e.dim), (Ring::R, 4));
        assert_eq!(e.form_b.as_ref().unwrap().kind(), FormKind::Skew);
        assert_eq!(e.semiinv.as_ref().unwrap().epsilon(), -1);
        assert_eq!(e.listed_mu, Some(1));
        assert_eq!(e.ud.as_ref().unwrap().name(), "O(2, 2)");
    }

    #[test]
    fn entries_32_and_54() {
        let e = build(32, Params::n(2)).unwrap();
        assert_eq!(e.title(), "Sp(4, R)/GL(2, R)");
        assert!(e.form_b.is_some() && e.semiinv.is_none());
        let e = build(54, Params::pq(1, 1)).unwrap();
        assert_eq!(e.title(), "GL(2, H)/GL(1, H) × GL(1, H)");
        assert!(e.form_b.is_none() && e.semiinv.is_none());
    }

    #[test]
    fn unknown_and_invalid() {
        assert!(matches!(build(99, Params::n(1)), Err(Error::UnknownEntry(99))));
        assert!(matches!(build(3, Params::n(0)), Err(Error::BadParams(_))));
        assert!(matches!(build(45, Params::pqrs(1, 1, 2, 0)), Err(Error::BadParams(_))));
    }

    #[test]
    fn stabilizer_of_identity_is_identity() {
        let e = build(13, Params::n(1)).unwrap();
        let id = Matrix::identity(e.ring, 1);
        assert!(stabilizer_embed(&e, &id).unwrap().is_identity());
        let minus = -&id;
        let g = stabilizer_embed(&e, &minus).unwrap();
        assert!(e.g.contains(&g));
        assert_eq!(e.base.0.image(&g), e.base.0);
        assert_eq!(e.base.1.image(&g), e.base.1);
        let two = Matrix::scalar(1, &Scalar::from_i64(Ring::C, 2));
        assert!(matches!(stabilizer_embed(&e, &two), Err(Error::NotInUDprime)));
    }
}
