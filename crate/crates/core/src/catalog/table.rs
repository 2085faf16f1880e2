use crate::error::{Error, Result};
use crate::forms::FormKind;
use crate::involutions::groups::GroupName;
use crate::involutions::Linearity;
use crate::scalar::Ring;

use super::{List1Data, Params};

/// Which parameters a series takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Schema {
    N,
    PQ,
    PQRS,
    KL,
    /// `(n, m)` with `Q₁` of dimension `n`
    NM,
    /// `(m, n)` with `Q₁` of dimension `m`
    MN,
}

impl Schema {
    pub fn fields(self) -> &'static [&'static str] {
        match self {
            Schema::N => &["n"],
            Schema::PQ => &["p", "q"],
            Schema::PQRS => &["p", "q", "r", "s"],
            Schema::KL => &["k", "l"],
            Schema::NM => &["n", "m"],
            Schema::MN => &["m", "n"],
        }
    }
}

/// `dim_K V` as a function of the parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Size {
    /// `2(p + q)`
    TwoPQ,
    /// `2n`
    TwoN,
    /// `4n`
    FourN,
    /// `p + q`
    PQ,
    /// `2(k + l)`
    TwoKL,
    /// `n + m`
    NM,
}

/// Static description of one series.
#[derive(Debug)]
pub struct EntryInfo {
    pub id: usize,
    pub list: u8,
    pub star: bool,
    pub schema: Schema,
    pub ring: Ring,
    /// `G/H` in parameter notation
    pub template: &'static str,
    /// the union of components, for ★ entries
    pub union: Option<&'static str>,
    pub note: Option<&'static str>,
    pub list1: Option<List1Data>,
    /// `B` on List 2, `D` on List 4
    pub form_kind: Option<FormKind>,
    /// `J` on List 3
    pub semiinv: Option<(Linearity, i64)>,
    size: Size,
}

/// Named groups of an instantiated entry.
#[derive(Clone, Debug)]
pub struct Names {
    pub g: Vec<GroupName>,
    pub h: Vec<GroupName>,
    pub g_star: Vec<GroupName>,
    pub glj: Vec<GroupName>,
    pub ud: Vec<GroupName>,
}

impl EntryInfo {
    pub fn ambient_dim(&self, p: &Params) -> usize {
        match self.size {
            Size::TwoPQ => 2 * (p.p + p.q),
            Size::TwoN => 2 * p.n,
            Size::FourN => 4 * p.n,
            Size::PQ => p.p + p.q,
            Size::TwoKL => 2 * (p.k + p.l),
            Size::NM => p.n + p.m,
        }
    }

    /// Half of `dim_K V` on Lists 1 to 3.
    pub fn half_dim(&self, p: &Params) -> usize {
        self.ambient_dim(p) / 2
    }

    pub fn validate(&self, p: &Params) -> Result<()> {
        let bad = |why: &str| Err(Error::BadParams(format!("entry {}: {why}", self.id)));
        match self.schema {
            Schema::N if p.n == 0 => bad("n must be at least 1"),
            Schema::PQ if self.list == 5 && (p.p == 0 || p.q == 0) => bad("p and q must be at least 1"),
            Schema::PQ if p.p + p.q == 0 => bad("p + q must be at least 1"),
            Schema::PQRS if p.r > p.p || p.s > p.q => bad("need r ≤ p and s ≤ q"),
            Schema::PQRS if p.r + p.s == 0 || p.r + p.s >= p.p + p.q => bad("need 0 < r + s < p + q"),
            Schema::KL if p.k == 0 || p.l == 0 => bad("k and l must be at least 1"),
            Schema::NM | Schema::MN if p.n == 0 || p.m == 0 => bad("n and m must be at least 1"),
            _ => Ok(()),
        }
    }

    pub fn names(&self, p: &Params) -> Names {
        names_for(self, p)
    }
}

pub const ALL_IDS: [usize; 54] = {
    let mut a = [0; 54];
    let mut i = 0;
    while i < 54 {
        a[i] = i + 1;
        i += 1;
    }
    a
};

pub const STAR_IDS: &[usize] = &[3, 5, 14, 15, 20, 26, 30, 45, 49, 50];

pub fn entry_info(id: usize) -> Option<&'static EntryInfo> {
    TABLE.get(id.checked_sub(1)?)
}

use FormKind::{Antihermitian as AH, Hermitian as HE, Skew as SK, Symmetric as SY};
use Linearity::{Antilinear as ANTI, Linear as LIN};
use Ring::{C, H, R};

const fn l1(
    id: usize,
    ring: Ring,
    b: FormKind,
    linearity: Linearity,
    epsilon: i64,
    mu: i64,
    size: Size,
    template: &'static str,
    union: Option<&'static str>,
) -> EntryInfo {
    EntryInfo {
        id,
        list: 1,
        star: union.is_some(),
        schema: if matches!(size, Size::TwoPQ) { Schema::PQ } else { Schema::N },
        ring,
        template,
        union,
        note: None,
        list1: Some(List1Data { ring, b, linearity, epsilon, mu }),
        form_kind: None,
        semiinv: None,
        size,
    }
}

const fn l2(id: usize, ring: Ring, b: FormKind, template: &'static str) -> EntryInfo {
    EntryInfo {
        id,
        list: 2,
        star: false,
        schema: Schema::N,
        ring,
        template,
        union: None,
        note: None,
        list1: None,
        form_kind: Some(b),
        semiinv: None,
        size: Size::TwoN,
    }
}

const fn l3(id: usize, ring: Ring, linearity: Linearity, epsilon: i64, template: &'static str) -> EntryInfo {
    EntryInfo {
        id,
        list: 3,
        star: false,
        schema: Schema::N,
        ring,
        template,
        union: None,
        note: None,
        list1: None,
        form_kind: None,
        semiinv: Some((linearity, epsilon)),
        size: Size::TwoN,
    }
}

const fn l4(id: usize, ring: Ring, d: FormKind, schema: Schema, template: &'static str, union: Option<&'static str>) -> EntryInfo {
    EntryInfo {
        id,
        list: 4,
        star: union.is_some(),
        schema,
        ring,
        template,
        union,
        note: None,
        list1: None,
        form_kind: Some(d),
        semiinv: None,
        size: match schema {
            Schema::KL => Size::TwoKL,
            Schema::PQRS => Size::PQ,
            _ => Size::NM,
        },
    }
}

const fn l5(id: usize, ring: Ring, template: &'static str) -> EntryInfo {
    EntryInfo {
        id,
        list: 5,
        star: false,
        schema: Schema::PQ,
        ring,
        template,
        union: None,
        note: Some("G* is taken to be G × G, acting on both members of the pair"),
        list1: None,
        form_kind: None,
        semiinv: None,
        size: Size::PQ,
    }
}

const fn with_note(mut e: EntryInfo, note: &'static str) -> EntryInfo {
    e.note = Some(note);
    e
}

static TABLE: [EntryInfo; 54] = [
    l1(1, R, SY, LIN, 1, 1, Size::TwoPQ, "O(p, q) × O(p, q)/O(p, q)", None),
    l1(2, R, SK, LIN, 1, 1, Size::FourN, "Sp(2n, R) × Sp(2n, R)/Sp(2n, R)", None),
    l1(3, R, SK, LIN, 1, -1, Size::TwoN, "GL(n, R)/O(n)", Some("∪_{p=0}^{n} GL(n, R)/O(p, n−p)")),
    with_note(
        l1(4, R, SY, LIN, 1, -1, Size::FourN, "GL(2n, R)/Sp(2n, R)", None),
        "D is skew-symmetric on R^4n, so U(D) = Sp(4n, R)",
    ),
    l1(5, R, SY, LIN, -1, -1, Size::TwoN, "O(n, C)/O(n)", Some("∪_{p=0}^{n} O(n, C)/O(p, n−p)")),
    l1(6, R, SK, LIN, -1, -1, Size::FourN, "Sp(2n, C)/Sp(2n, R)", None),
    l1(7, R, SY, LIN, -1, 1, Size::FourN, "U(n, n)/Sp(2n, R)", None),
    l1(8, R, SK, LIN, -1, 1, Size::TwoPQ, "U(p, q)/O(p, q)", None),
    l1(9, C, SY, LIN, 1, 1, Size::TwoN, "O(n, C) × O(n, C)/O(n, C)", None),
    l1(10, C, SK, LIN, 1, 1, Size::FourN, "Sp(2n, C) × Sp(2n, C)/Sp(2n, C)", None),
    l1(11, C, HE, LIN, 1, 1, Size::TwoPQ, "U(p, q) × U(p, q)/U(p, q)", None),
    l1(12, C, SY, LIN, 1, -1, Size::FourN, "GL(2n, C)/Sp(2n, C)", None),
    l1(13, C, SK, LIN, 1, -1, Size::TwoN, "GL(n, C)/O(n, C)", None),
    l1(14, C, HE, LIN, 1, -1, Size::TwoN, "GL(n, C)/U(n)", Some("∪_{p=0}^{n} GL(n, C)/U(p, n−p)")),
    l1(15, C, SK, ANTI, 1, 1, Size::TwoN, "Sp(2n, R)/U(n)", Some("∪_{p=0}^{n} Sp(2n, R)/U(p, n−p)")),
    l1(16, C, SY, ANTI, 1, 1, Size::TwoPQ, "O(2p, 2q)/U(p, q)", None),
    l1(17, C, HE, ANTI, 1, 1, Size::TwoN, "O(n, n)/O(n, C)", None),
    l1(18, C, HE, ANTI, 1, -1, Size::FourN, "Sp(4n, R)/Sp(2n, C)", None),
    l1(19, C, SK, ANTI, -1, 1, Size::TwoPQ, "Sp(p, q)/U(p, q)", None),
    with_note(
        l1(20, C, SY, ANTI, -1, 1, Size::TwoN, "SO*(2n)/U(n)", Some("∪_{p=0}^{n} SO*(2n)/U(p, n−p)")),
        "the union is printed from p = 1 in some sources; components p = 0, …, n are all realized",
    ),
    l1(21, C, HE, ANTI, -1, 1, Size::FourN, "Sp(n, n)/Sp(2n, C)", None),
    l1(22, C, HE, ANTI, -1, -1, Size::TwoN, "SO*(2n)/O(n, C)", None),
    l1(23, H, HE, LIN, 1, 1, Size::TwoPQ, "Sp(p, q) × Sp(p, q)/Sp(p, q)", None),
    l1(24, H, AH, LIN, 1, 1, Size::TwoN, "SO*(2n) × SO*(2n)/SO*(2n)", None),
    l1(25, H, HE, LIN, 1, -1, Size::TwoN, "GL(n, H)/SO*(2n)", None),
    l1(26, H, AH, LIN, 1, -1, Size::TwoN, "GL(n, H)/Sp(n)", Some("∪_{p=0}^{n} GL(n, H)/Sp(p, n−p)")),
    l1(27, H, AH, LIN, -1, 1, Size::TwoPQ, "U(2p, 2q)/Sp(p, q)", None),
    l1(28, H, HE, LIN, -1, 1, Size::TwoN, "U(n, n)/SO*(2n)", None),
    l1(29, H, AH, LIN, -1, -1, Size::TwoN, "O(2n, C)/SO*(2n)", None),
    l1(30, H, HE, LIN, -1, -1, Size::TwoN, "Sp(2n, C)/Sp(n)", Some("∪_{p=0}^{n} Sp(2n, C)/Sp(p, n−p)")),
    l2(31, R, SY, "O(n, n)/GL(n, R)"),
    l2(32, R, SK, "Sp(2n, R)/GL(n, R)"),
    l2(33, C, SY, "O(2n, C)/GL(n, C)"),
    l2(34, C, SK, "Sp(2n, C)/GL(n, C)"),
    l2(35, C, HE, "U(n, n)/GL(n, C)"),
    l2(36, H, HE, "Sp(n, n)/GL(n, H)"),
    l2(37, H, AH, "SO*(4n)/GL(n, H)"),
    l3(38, R, LIN, 1, "GL(n, R) × GL(n, R)/GL(n, R)"),
    l3(39, R, LIN, -1, "GL(n, C)/GL(n, R)"),
    l3(40, C, LIN, 1, "GL(n, C) × GL(n, C)/GL(n, C)"),
    l3(41, C, ANTI, 1, "GL(2n, R)/GL(n, C)"),
    l3(42, C, ANTI, -1, "GL(n, H)/GL(n, C)"),
    l3(43, H, LIN, 1, "GL(n, H) × GL(n, H)/GL(n, H)"),
    l3(44, H, LIN, -1, "GL(2n, C)/GL(n, H)"),
    l4(
        45,
        R,
        SY,
        Schema::PQRS,
        "O(p, q)/O(r, s) × O(p−r, q−s)",
        Some("∪_{r+s=m} O(p, q)/O(r, s) × O(p−r, q−s)"),
    ),
    l4(46, R, SK, Schema::KL, "Sp(2(k+l), R)/Sp(2k, R) × Sp(2l, R)", None),
    l4(47, C, SY, Schema::NM, "O(n+m, C)/O(n, C) × O(m, C)", None),
    l4(48, C, SK, Schema::KL, "Sp(2(k+l), C)/Sp(2k, C) × Sp(2l, C)", None),
    l4(
        49,
        C,
        HE,
        Schema::PQRS,
        "U(p, q)/U(r, s) × U(p−r, q−s)",
        Some("∪_{r+s=m} U(p, q)/U(r, s) × U(p−r, q−s)"),
    ),
    l4(
        50,
        H,
        HE,
        Schema::PQRS,
        "Sp(p, q)/Sp(r, s) × Sp(p−r, q−s)",
        Some("∪_{r+s=m} Sp(p, q)/Sp(r, s) × Sp(p−r, q−s)"),
    ),
    l4(51, H, AH, Schema::MN, "SO*(2(m+n))/SO*(2m) × SO*(2n)", None),
    l5(52, R, "GL(p+q, R)/GL(p, R) × GL(q, R)"),
    l5(53, C, "GL(p+q, C)/GL(p, C) × GL(q, C)"),
    l5(54, H, "GL(p+q, H)/GL(p, H) × GL(q, H)"),
];

fn names_for(info: &EntryInfo, p: &Params) -> Names {
    use GroupName::*;
    let Params { n, p: pp, q, r, s, k, l, m } = *p;
    let pq = pp + q;
    let mut glj = Vec::new();
    if let Some(d) = info.list1 {
        let half = info.half_dim(p);
        glj = match (d.ring, d.linearity, d.epsilon) {
            (ring, Linearity::Linear, 1) => vec![GL(ring, half), GL(ring, half)],
            (Ring::R, _, _) => vec![GL(Ring::C, half)],
            (Ring::C, Linearity::Antilinear, -1) => vec![GL(Ring::H, half)],
            (Ring::C, _, _) => vec![GL(Ring::R, 2 * half)],
            (Ring::H, _, _) => vec![GL(Ring::C, 2 * half)],
        };
    }
    let (g, h, g_star, ud): (Vec<GroupName>, Vec<GroupName>, Vec<GroupName>, Vec<GroupName>) = match info.id {
        1 => (vec![O(pp, q), O(pp, q)], vec![O(pp, q)], vec![O(pq, pq)], vec![O(2 * pp, 2 * q)]),
        2 => (vec![SpR(2 * n), SpR(2 * n)], vec![SpR(2 * n)], vec![SpR(4 * n)], vec![SpR(4 * n)]),
        3 => (vec![GL(R, n)], vec![O(n, 0)], vec![SpR(2 * n)], vec![O(n, n)]),
        4 => (vec![GL(R, 2 * n)], vec![SpR(2 * n)], vec![O(2 * n, 2 * n)], vec![SpR(4 * n)]),
        5 => (vec![OC(n)], vec![O(n, 0)], vec![O(n, n)], vec![O(n, n)]),
        6 => (vec![SpC(2 * n)], vec![SpR(2 * n)], vec![SpR(4 * n)], vec![SpR(4 * n)]),
        7 => (vec![U(n, n)], vec![SpR(2 * n)], vec![O(2 * n, 2 * n)], vec![SpR(4 * n)]),
        8 => (vec![U(pp, q)], vec![O(pp, q)], vec![SpR(2 * pq)], vec![O(2 * pp, 2 * q)]),
        9 => (vec![OC(n), OC(n)], vec![OC(n)], vec![OC(2 * n)], vec![OC(2 * n)]),
        10 => (vec![SpC(2 * n), SpC(2 * n)], vec![SpC(2 * n)], vec![SpC(4 * n)], vec![SpC(4 * n)]),
        11 => (vec![U(pp, q), U(pp, q)], vec![U(pp, q)], vec![U(pq, pq)], vec![U(2 * pp, 2 * q)]),
        12 => (vec![GL(C, 2 * n)], vec![SpC(2 * n)], vec![OC(4 * n)], vec![SpC(4 * n)]),
        13 => (vec![GL(C, n)], vec![OC(n)], vec![SpC(2 * n)], vec![OC(2 * n)]),
        14 => (vec![GL(C, n)], vec![U(n, 0)], vec![U(n, n)], vec![U(n, n)]),
        15 => (vec![SpR(2 * n)], vec![U(n, 0)], vec![SpC(2 * n)], vec![U(n, n)]),
        16 => (vec![O(2 * pp, 2 * q)], vec![U(pp, q)], vec![OC(2 * pq)], vec![U(2 * pp, 2 * q)]),
        17 => (vec![O(n, n)], vec![OC(n)], vec![U(n, n)], vec![OC(2 * n)]),
        18 => (vec![SpR(4 * n)], vec![SpC(2 * n)], vec![U(2 * n, 2 * n)], vec![SpC(4 * n)]),
        19 => (vec![Sp(pp, q)], vec![U(pp, q)], vec![SpC(2 * pq)], vec![U(2 * pp, 2 * q)]),
        20 => (vec![SOStar(2 * n)], vec![U(n, 0)], vec![OC(2 * n)], vec![U(n, n)]),
        21 => (vec![Sp(n, n)], vec![SpC(2 * n)], vec![U(2 * n, 2 * n)], vec![SpC(4 * n)]),
        22 => (vec![SOStar(2 * n)], vec![OC(n)], vec![U(n, n)], vec![OC(2 * n)]),
        23 => (vec![Sp(pp, q), Sp(pp, q)], vec![Sp(pp, q)], vec![Sp(pq, pq)], vec![Sp(2 * pp, 2 * q)]),
        24 => (vec![SOStar(2 * n), SOStar(2 * n)], vec![SOStar(2 * n)], vec![SOStar(4 * n)], vec![SOStar(4 * n)]),
        25 => (vec![GL(H, n)], vec![SOStar(2 * n)], vec![Sp(n, n)], vec![SOStar(4 * n)]),
        26 => (vec![GL(H, n)], vec![Sp(n, 0)], vec![SOStar(4 * n)], vec![Sp(n, n)]),
        27 => (vec![U(2 * pp, 2 * q)], vec![Sp(pp, q)], vec![SOStar(4 * pq)], vec![Sp(2 * pp, 2 * q)]),
        28 => (vec![U(n, n)], vec![SOStar(2 * n)], vec![Sp(n, n)], vec![SOStar(4 * n)]),
        29 => (vec![OC(2 * n)], vec![SOStar(2 * n)], vec![SOStar(4 * n)], vec![SOStar(4 * n)]),
        30 => (vec![SpC(2 * n)], vec![Sp(n, 0)], vec![Sp(n, n)], vec![Sp(n, n)]),
        31..=37 => {
            let g = match info.id {
                31 => O(n, n),
                32 => SpR(2 * n),
                33 => OC(2 * n),
                34 => SpC(2 * n),
                35 => U(n, n),
                36 => Sp(n, n),
                _ => SOStar(4 * n),
            };
            (vec![g], vec![GL(info.ring, n)], vec![g, g], Vec::new())
        }
        38..=44 => {
            let g = match info.id {
                38 => vec![GL(R, n), GL(R, n)],
                39 => vec![GL(C, n)],
                40 => vec![GL(C, n), GL(C, n)],
                41 => vec![GL(R, 2 * n)],
                42 => vec![GL(H, n)],
                43 => vec![GL(H, n), GL(H, n)],
                _ => vec![GL(C, 2 * n)],
            };
            glj = g.clone();
            (g, vec![GL(info.ring, n)], vec![GL(info.ring, 2 * n)], Vec::new())
        }
        45 => (vec![O(pp, q)], vec![O(r, s), O(pp - r, q - s)], vec![GL(R, pq)], Vec::new()),
        46 => (vec![SpR(2 * (k + l))], vec![SpR(2 * k), SpR(2 * l)], vec![GL(R, 2 * (k + l))], Vec::new()),
        47 => (vec![OC(n + m)], vec![OC(n), OC(m)], vec![GL(C, n + m)], Vec::new()),
        48 => (vec![SpC(2 * (k + l))], vec![SpC(2 * k), SpC(2 * l)], vec![GL(C, 2 * (k + l))], Vec::new()),
        49 => (vec![U(pp, q)], vec![U(r, s), U(pp - r, q - s)], vec![GL(C, pq)], Vec::new()),
        50 => (vec![Sp(pp, q)], vec![Sp(r, s), Sp(pp - r, q - s)], vec![GL(H, pq)], Vec::new()),
        51 => (vec![SOStar(2 * (m + n))], vec![SOStar(2 * m), SOStar(2 * n)], vec![GL(H, m + n)], Vec::new()),
        _ => {
            let g = GL(info.ring, pq);
            (vec![g], vec![GL(info.ring, pp), GL(info.ring, q)], vec![g, g], Vec::new())
        }
    };
    Names { g, h, g_star, glj, ud }
}
