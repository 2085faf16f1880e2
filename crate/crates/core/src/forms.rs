//! Nondegenerate forms of the seven admissible types.
//!
//! A form is stored by its Gram matrix `G`: `B(v, w) = w*·G·v` for the
//! sesquilinear kinds and `B(v, w) = wᵀ·G·v` for the bilinear kinds, so that
//! `B(v·λ, w) = B(v, w)·λ` and `B(v, w·λ) = conj(λ)·B(v, w)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{Rational, Ring, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FormKind {
    #[serde(rename = "sym")]
    Symmetric,
    #[serde(rename = "skew")]
    Skew,
    #[serde(rename = "herm")]
    Hermitian,
    #[serde(rename = "antiherm")]
    Antihermitian,
}

impl FormKind {
    pub fn is_sesquilinear(self) -> bool {
        matches!(self, FormKind::Hermitian | FormKind::Antihermitian)
    }

    /// `+1` for symmetric/hermitian, `−1` for skew/antihermitian.
    pub fn sign(self) -> i64 {
        match self {
            FormKind::Symmetric | FormKind::Hermitian => 1,
            FormKind::Skew | FormKind::Antihermitian => -1,
        }
    }

    pub fn from_parts(sesquilinear: bool, sign: i64) -> FormKind {
        match (sesquilinear, sign > 0) {
            (false, true) => FormKind::Symmetric,
            (false, false) => FormKind::Skew,
            (true, true) => FormKind::Hermitian,
            (true, false) => FormKind::Antihermitian,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            FormKind::Symmetric => "sym",
            FormKind::Skew => "skew",
            FormKind::Hermitian => "herm",
            FormKind::Antihermitian => "antiherm",
        }
    }

    pub fn from_symbol(s: &str) -> Option<FormKind> {
        match s {
            "sym" => Some(FormKind::Symmetric),
            "skew" => Some(FormKind::Skew),
            "herm" => Some(FormKind::Hermitian),
            "antiherm" => Some(FormKind::Antihermitian),
            _ => None,
        }
    }
}

/// Ring and kind of a form. Only the seven combinations of the
/// classification are constructible: over ℝ the two bilinear kinds, over ℂ
/// all four, over ℍ the two sesquilinear kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FormType {
    pub ring: Ring,
    pub kind: FormKind,
}

impl FormType {
    pub fn new(ring: Ring, kind: FormKind) -> Result<FormType> {
        let ok = match ring {
            Ring::R => !kind.is_sesquilinear(),
            Ring::C => true,
            Ring::H => kind.is_sesquilinear(),
        };
        if !ok {
            return Err(Error::InvalidForm(format!("no {} forms over {}", kind.symbol(), ring)));
        }
        Ok(FormType { ring, kind })
    }

    /// Build a type from the linearity and symmetry sign, reading
    /// "hermitian over ℝ" as symmetric.
    pub fn from_parts(ring: Ring, sesquilinear: bool, sign: i64) -> Result<FormType> {
        let sesq = sesquilinear && ring != Ring::R;
        FormType::new(ring, FormKind::from_parts(sesq, sign))
    }

    /// Whether inertia classifies forms of this type.
    pub fn has_inertia(self) -> bool {
        matches!(
            (self.ring, self.kind),
            (Ring::R, FormKind::Symmetric) | (_, FormKind::Hermitian) | (Ring::C, FormKind::Antihermitian)
        )
    }
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.ring, self.kind.symbol())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Form {
    ftype: FormType,
    gram: Matrix,
}

impl Form {
    pub fn new(ring: Ring, kind: FormKind, gram: Matrix) -> Result<Form> {
        let ftype = FormType::new(ring, kind)?;
        if !gram.is_square() {
            return Err(Error::InvalidForm("Gram matrix is not square".into()));
        }
        if gram.ring() > ring {
            return Err(Error::RingMismatch {
                expected: ring,
                found: gram.ring(),
            });
        }
        let gram = gram.promote(ring);
        let adj = gram.adjoint(kind.is_sesquilinear());
        let expected = if kind.sign() > 0 { gram.clone() } else { -&gram };
        if adj != expected {
            return Err(Error::InvalidForm(format!("Gram matrix is not {}", kind.symbol())));
        }
        if !gram.is_invertible() {
            return Err(Error::InvalidForm("Gram matrix is degenerate".into()));
        }
        Ok(Form { ftype, gram })
    }

    /// Symmetric/hermitian form with Gram `[[0, I], [I, 0]]`, or the skew
    /// form `[[0, I], [−I, 0]]`, on `K^{2m}`.
    pub fn hyperbolic(ring: Ring, kind: FormKind, m: usize) -> Result<Form> {
        let i = Matrix::identity(ring, m);
        let z = Matrix::zeros(ring, m, m);
        let lower = if kind.sign() > 0 { i.clone() } else { -&i };
        let gram = Matrix::from_blocks(&z, &i, &lower, &z);
        match kind {
            FormKind::Antihermitian => {
                // i·[[0, I], [I, 0]] over ℂ; over ℍ the diagonal model is used
                if ring == Ring::H {
                    return Form::antihermitian_quaternionic(2 * m);
                }
                let g = Matrix::from_blocks(&z, &i, &i, &z).scale_left(&Scalar::i());
                Form::new(ring, kind, g)
            }
            _ => Form::new(ring, kind, gram),
        }
    }

    /// Hermitian (symmetric over ℝ) form `diag(I_p, −I_q)`.
    pub fn signature(ring: Ring, p: usize, q: usize) -> Result<Form> {
        let diag: Vec<Scalar> = (0..p + q)
            .map(|k| Scalar::from_i64(ring, if k < p { 1 } else { -1 }))
            .collect();
        let kind = if ring == Ring::R { FormKind::Symmetric } else { FormKind::Hermitian };
        Form::new(ring, kind, Matrix::diagonal(ring, &diag))
    }

    /// Antihermitian form `diag(j, …, j)` on `ℍ^n`.
    pub fn antihermitian_quaternionic(n: usize) -> Result<Form> {
        Form::new(Ring::H, FormKind::Antihermitian, Matrix::scalar(n, &Scalar::j()))
    }

    pub fn form_type(&self) -> FormType {
        self.ftype
    }

    pub fn ring(&self) -> Ring {
        self.ftype.ring
    }

    pub fn kind(&self) -> FormKind {
        self.ftype.kind
    }

    pub fn is_sesquilinear(&self) -> bool {
        self.ftype.kind.is_sesquilinear()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// `w†·G·v` with `†` the adjoint of this form's kind.
    pub fn adjoint(&self, m: &Matrix) -> Matrix {
        m.adjoint(self.is_sesquilinear())
    }

    pub fn evaluate(&self, v: &Matrix, w: &Matrix) -> Result<Scalar> {
        if v.rows() != self.dim() || w.rows() != self.dim() || v.cols() != 1 || w.cols() != 1 {
            return Err(Error::DimensionMismatch(format!(
                "form on K^{} evaluated on vectors of length {} and {}",
                self.dim(),
                v.rows(),
                w.rows()
            )));
        }
        Ok(self.pair_gram(v, w).get(0, 0).clone())
    }

    /// Matrix with entries `B(u_j, w_i)` at `(i, j)`, i.e. `W†·G·U`.
    pub fn pair_gram(&self, u: &Matrix, w: &Matrix) -> Matrix {
        &(&self.adjoint(w) * &self.gram) * u
    }

    /// Gram matrix of the pullback along `T`: `T†·G·T`.
    pub fn pullback_gram(&self, t: &Matrix) -> Matrix {
        self.pair_gram(t, t)
    }

    /// The form `B(Tv, Tw)`; fails when `T` is not injective enough to keep
    /// it nondegenerate.
    pub fn pullback(&self, t: &Matrix) -> Result<Form> {
        Form::new(self.ring(), self.kind(), self.pullback_gram(t))
    }

    /// Restriction to a subspace, in the subspace's canonical basis.
    pub fn restrict(&self, u: &Subspace) -> Result<Form> {
        self.pullback(u.basis())
    }

    pub fn is_isotropic(&self, u: &Subspace) -> bool {
        self.pair_gram(u.basis(), u.basis()).is_zero()
    }

    /// `{v : B(v, u) = 0 for all u ∈ U}`.
    pub fn orthogonal_complement(&self, u: &Subspace) -> Subspace {
        let rows = &self.adjoint(u.basis()) * &self.gram;
        Subspace::canonicalize(&rows.kernel())
    }

    /// `G` itself when it already has inertia, `i·G` for an antihermitian
    /// form over ℂ.
    pub fn hermitian_gram(&self) -> Result<Matrix> {
        if !self.ftype.has_inertia() {
            return Err(Error::WrongKind(format!("{} forms have no inertia", self.ftype)));
        }
        if self.kind() == FormKind::Antihermitian {
            return Ok(self.gram.scale_left(&Scalar::i()));
        }
        Ok(self.gram.clone())
    }

    /// Positive and negative inertia indexes.
    pub fn inertia(&self) -> Result<(usize, usize)> {
        let (p, q, _) = hermitian_inertia(&self.hermitian_gram()?, self.is_sesquilinear());
        Ok((p, q))
    }

    pub fn is_split(&self) -> bool {
        let n = self.dim();
        if self.ftype.has_inertia() {
            let (p, q) = self.inertia().expect("inertia defined");
            return p == q;
        }
        match self.kind() {
            FormKind::Skew => true,
            _ => n.is_multiple_of(2),
        }
    }

    /// Congruence up to a linear change of variables.
    pub fn congruent(&self, other: &Form) -> Result<bool> {
        if self.ftype != other.ftype || self.dim() != other.dim() {
            return Err(Error::TypeMismatch);
        }
        if self.ftype.has_inertia() {
            return Ok(self.inertia()? == other.inertia()?);
        }
        Ok(true)
    }

    /// Hyperbolic basis `(E, F)` with `B(e_k, e_l) = B(f_k, f_l) = 0` and
    /// `B(e_k, f_l) = δ_kl`, returned as two `n × n/2` matrices.
    pub fn split_basis(&self) -> Result<(Matrix, Matrix)> {
        if !self.is_split() {
            return Err(Error::NotSplit);
        }
        let ring = self.ring();
        let n = self.dim();
        let mut es = Vec::new();
        let mut fs = Vec::new();
        let mut w = Matrix::identity(ring, n);
        while w.cols() > 0 {
            let e = self.find_isotropic(&w)?;
            // entries B(e, w_k)
            let pairing = self.pair_gram(&e, &w);
            let k = (0..w.cols())
                .find(|&k| !pairing.get(k, 0).is_zero())
                .expect("restriction is nondegenerate");
            let b = pairing.get(k, 0).clone();
            let lambda = if self.is_sesquilinear() { b.conj() } else { b };
            let f = w.column(k).scale_right(&lambda.inv().expect("nonzero"));
            let c = self.evaluate(&f, &f)?.scale(&Rational::new((-1).into(), 2.into()));
            let f = &f + &e.scale_right(&c);
            debug_assert!(self.evaluate(&e, &f)?.is_one());
            // the part of W orthogonal to e and f
            let constraints = Matrix::vstack(&[
                &self.pair_gram(&w, &e),
                &self.pair_gram(&w, &f),
            ]);
            w = &w * &constraints.kernel();
            es.push(e);
            fs.push(f);
        }
        let es: Vec<&Matrix> = es.iter().collect();
        let fs: Vec<&Matrix> = fs.iter().collect();
        Ok((Matrix::hstack(&es), Matrix::hstack(&fs)))
    }

    /// A nonzero isotropic vector in the column span of `w`, on which the
    /// form is nondegenerate and split.
    fn find_isotropic(&self, w: &Matrix) -> Result<Matrix> {
        if self.kind() == FormKind::Skew {
            return Ok(w.column(0));
        }
        let local = self.pullback_gram(w);
        let m = local.rows();
        if let Some(k) = (0..m).find(|&k| local.get(k, k).is_zero()) {
            return Ok(w.column(k));
        }
        let sesq = self.is_sesquilinear();
        let (t, diag) = diagonalize(&local, sesq);
        for a in 0..m {
            for b in a + 1..m {
                if let Some(lambda) = pair_solution(&diag[a], &diag[b], self.ring(), sesq) {
                    let mut x = Matrix::zeros(self.ring(), m, 1);
                    x.set(a, 0, Scalar::one(self.ring()));
                    x.set(b, 0, lambda);
                    return Ok(&(w * &t) * &x);
                }
            }
        }
        self.brute_force_isotropic(w, &local)
    }

    fn brute_force_isotropic(&self, w: &Matrix, local: &Matrix) -> Result<Matrix> {
        let m = local.rows();
        let mut digits: Vec<Scalar> = vec![Scalar::zero(self.ring())];
        for unit in self.ring().units() {
            for s in [1, -1, 2, -2] {
                digits.push(unit.scale(&Rational::from_integer(s.into())));
            }
        }
        let budget = 200_000usize;
        let base = digits.len();
        let total = base.checked_pow(m as u32).unwrap_or(usize::MAX).min(budget);
        for code in 1..total {
            let mut c = code;
            let x = Matrix::from_fn(self.ring(), m, 1, |_, _| {
                let d = digits[c % base].clone();
                c /= base;
                d
            });
            if x.is_zero() {
                continue;
            }
            if self.pair_gram_local(local, &x).is_zero() {
                return Ok(w * &x);
            }
        }
        Err(Error::NotFound)
    }

    fn pair_gram_local(&self, local: &Matrix, x: &Matrix) -> Scalar {
        (&(&self.adjoint(x) * local) * x).get(0, 0).clone()
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} form with Gram\n{}", self.ftype, self.gram)
    }
}

/// Congruence diagonalization `Tᵗ·A·T = diag(d)` of a matrix with
/// `A† = ±A` (adjoint per `sesq`). Works for every kind except skew.
pub fn diagonalize(a: &Matrix, sesq: bool) -> (Matrix, Vec<Scalar>) {
    let ring = a.ring();
    let n = a.rows();
    let mut t = Matrix::identity(ring, n);
    let mut cur = a.clone();
    for k in 0..n {
        if cur.get(k, k).is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !cur.get(i, i).is_zero()) {
                let p = permutation_swap(ring, n, k, i);
                cur = congruence(&cur, &p, sesq);
                t = &t * &p;
            } else if let Some(i) = (k + 1..n).find(|&i| !cur.get(k, i).is_zero()) {
                // column k += column i · λ makes the pivot nonzero
                let lambda = pivot_shift(cur.get(k, i), cur.get(i, k), sesq);
                let mut s = Matrix::identity(ring, n);
                s.set(i, k, lambda);
                cur = congruence(&cur, &s, sesq);
                t = &t * &s;
            } else {
                continue;
            }
        }
        let d_inv = cur.get(k, k).inv().expect("nonzero pivot");
        let mut s = Matrix::identity(ring, n);
        for j in k + 1..n {
            let entry = cur.get(k, j);
            if !entry.is_zero() {
                s.set(k, j, -(&d_inv * entry));
            }
        }
        cur = congruence(&cur, &s, sesq);
        t = &t * &s;
    }
    let diag = (0..n).map(|k| cur.get(k, k).clone()).collect();
    (t, diag)
}

fn congruence(a: &Matrix, t: &Matrix, sesq: bool) -> Matrix {
    &(&t.adjoint(sesq) * a) * t
}

fn permutation_swap(ring: Ring, n: usize, a: usize, b: usize) -> Matrix {
    Matrix::from_fn(ring, n, n, |r, c| {
        let src = if c == a { b } else if c == b { a } else { c };
        Scalar::from_i64(ring, (r == src) as i64)
    })
}

/// A scalar `λ` with `λ†·a_ki + a_ik·λ ≠ 0` (the new pivot after adding
/// column `i`·λ to column `k` when both diagonal entries vanish).
fn pivot_shift(a_ki: &Scalar, a_ik: &Scalar, sesq: bool) -> Scalar {
    let ring = a_ki.ring().join(a_ik.ring());
    let mut candidates = vec![a_ki.conj(), Scalar::one(ring)];
    candidates.extend(ring.units());
    for lambda in candidates {
        let l_adj = if sesq { lambda.conj() } else { lambda.clone() };
        let pivot = &(&l_adj * a_ik) + &(a_ki * &lambda);
        if !pivot.is_zero() {
            return lambda;
        }
    }
    unreachable!("some unit gives a nonzero pivot")
}

/// Signs of a hermitian (or real symmetric) matrix: `(positive, negative, zero)`.
pub fn hermitian_inertia(a: &Matrix, sesq: bool) -> (usize, usize, usize) {
    let (_, diag) = diagonalize(a, sesq);
    let mut out = (0, 0, 0);
    for d in diag {
        debug_assert!(d.is_real(), "hermitian diagonal is real");
        if d.is_zero() {
            out.2 += 1;
        } else if d.re().is_positive() {
            out.0 += 1;
        } else {
            out.1 += 1;
        }
    }
    out
}

/// `λ` with `d_a + λ†·d_b·λ = 0`, or `None` if the small search fails.
fn pair_solution(d_a: &Scalar, d_b: &Scalar, ring: Ring, sesq: bool) -> Option<Scalar> {
    if d_a.is_real() && d_b.is_real() {
        let r = -(d_a.re() / d_b.re());
        if sesq {
            if !r.is_positive() {
                return None;
            }
            let parts = match ring {
                Ring::R => 1,
                Ring::C => 2,
                Ring::H => 4,
            };
            let coeffs = rational_sum_of_squares(&r, parts)?;
            let mut full = coeffs;
            full.resize(ring.real_dim(), Rational::zero());
            return Some(Scalar::from_coeffs(ring, &full));
        }
        // bilinear: λ² = r
        if let Some(s) = rational_sqrt(&r.abs()) {
            if r.is_positive() {
                return Some(Scalar::from_rational(ring, s));
            }
            if ring == Ring::C {
                return Some(Scalar::complex(Rational::zero(), s));
            }
        }
        return None;
    }
    // antihermitian diagonal entries over ℍ: search small quaternions
    let range = -2i64..=2;
    for a in range.clone() {
        for b in range.clone() {
            for c in range.clone() {
                for d in range.clone() {
                    let lambda = Scalar::quaternion_i64(a, b, c, d).promote(ring);
                    if lambda.is_zero() || (ring != Ring::H && (c != 0 || d != 0)) {
                        continue;
                    }
                    let l_adj = if sesq { lambda.conj() } else { lambda.clone() };
                    if (d_a + &(&(&l_adj * d_b) * &lambda)).is_zero() {
                        return Some(lambda);
                    }
                }
            }
        }
    }
    None
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    let n = integer_sqrt(r.numer())?;
    let d = integer_sqrt(r.denom())?;
    Some(Rational::new(n, d))
}

fn integer_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

/// Write a positive rational as a sum of `parts` rational squares by small
/// exhaustive search on `numer·denom`.
fn rational_sum_of_squares(r: &Rational, parts: usize) -> Option<Vec<Rational>> {
    let target = r.numer() * r.denom();
    let small = target.to_u64().filter(|&t| t <= 1 << 40);
    let ints: Vec<BigInt> = match small.and_then(|t| integer_sum_of_squares(t, parts, 64)) {
        Some(v) => v.into_iter().map(BigInt::from).collect(),
        None if parts == 4 && !target.is_negative() => four_squares(&target)?,
        None => return None,
    };
    let den = Rational::from_integer(r.denom().clone());
    Some(ints.into_iter().map(|x| Rational::from_integer(x) / &den).collect())
}

/// `n = a² + b² + c² + d²` for large `n`: subtract two squares until the
/// remainder is a prime `p ≡ 1 (mod 4)`, then split `p` by the Euclidean
/// algorithm on a square root of `−1`.
fn four_squares(n: &BigInt) -> Option<Vec<BigInt>> {
    if n.is_zero() {
        return Some(vec![BigInt::zero(); 4]);
    }
    let (four, two) = (BigInt::from(4), BigInt::from(2));
    if (n % &four).is_zero() {
        let rest = four_squares(&(n / &four))?;
        return Some(rest.into_iter().map(|x| x * &two).collect());
    }
    let one = BigInt::from(1);
    let mut x = n.sqrt();
    for _ in 0..4096 {
        let rem_x = n - &x * &x;
        let mut y = rem_x.sqrt();
        for _ in 0..64 {
            let p = &rem_x - &y * &y;
            if let Some((a, b)) = two_squares_of_prime(&p) {
                let out = vec![x.clone(), y.clone(), a, b];
                if out.iter().map(|v| v * v).sum::<BigInt>() == *n {
                    return Some(out);
                }
            }
            if y.is_zero() {
                break;
            }
            y -= &one;
        }
        if x.is_zero() {
            break;
        }
        x -= &one;
    }
    None
}

/// `p = a² + b²` for `p` = 0, 1, 2 or a probable prime `≡ 1 (mod 4)`.
fn two_squares_of_prime(p: &BigInt) -> Option<(BigInt, BigInt)> {
    let (zero, one) = (BigInt::zero(), BigInt::from(1));
    if *p <= BigInt::from(2) {
        return match p.to_u64()? {
            0 => Some((zero.clone(), zero)),
            1 => Some((one, zero)),
            _ => Some((one.clone(), one)),
        };
    }
    if p % 4u32 != one || !probably_prime(p) {
        return None;
    }
    let minus_one = p - &one;
    let t = (2u32..200).map(BigInt::from).find_map(|c| {
        let t = c.modpow(&(&minus_one / 4u32), p);
        (&t * &t % p == minus_one).then_some(t)
    })?;
    let (mut a, mut b) = (p.clone(), t);
    while &b * &b > *p {
        let r = &a % &b;
        a = b;
        b = r;
    }
    let c = (p - &b * &b).sqrt();
    (&b * &b + &c * &c == *p).then_some((b, c))
}

/// Miller–Rabin with the first twelve prime bases.
fn probably_prime(n: &BigInt) -> bool {
    let one = BigInt::from(1);
    let minus_one = n - &one;
    let mut d = minus_one.clone();
    let mut s = 0;
    while (&d % 2u32).is_zero() {
        d /= 2u32;
        s += 1;
    }
    'bases: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let a = BigInt::from(a);
        if a >= *n {
            continue;
        }
        let mut x = a.modpow(&d, n);
        if x == one || x == minus_one {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == minus_one {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn integer_sum_of_squares(n: u64, parts: usize, tries: usize) -> Option<Vec<u64>> {
    if parts == 1 {
        let s = n.sqrt();
        return (s * s == n).then(|| vec![s]);
    }
    if n == 0 {
        return Some(vec![0; parts]);
    }
    let top = n.sqrt();
    for x in (0..=top).rev().take(tries) {
        if let Some(mut rest) = integer_sum_of_squares(n - x * x, parts - 1, tries) {
            rest.insert(0, x);
            return Some(rest);
        }
    }
    None
}

impl Form {
    /// `B` with Gram `G·s` for a central real scalar `s`.
    pub fn scaled(&self, s: i64) -> Form {
        Form {
            ftype: self.ftype,
            gram: self.gram.scale_right(&Scalar::from_i64(self.ring(), s)),
        }
    }

    /// Whether `g` preserves the form: `g†·G·g = G`.
    pub fn is_preserved_by(&self, g: &Matrix) -> bool {
        g.rows() == self.dim() && g.cols() == self.dim() && self.pullback_gram(g) == self.gram
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vec_of(ring: Ring, xs: Vec<Scalar>) -> Matrix {
        Matrix::column_vector(ring, xs)
    }

    #[test]
    fn standard_symmetric_value() {
        let b = Form::signature(Ring::R, 2, 0).unwrap();
        let e = Matrix::from_i64(Ring::R, &[&[1], &[0]]);
        assert!(b.evaluate(&e, &e).unwrap().is_one());
    }

    #[test]
    fn skew_pairing_is_antisymmetric() {
        let b = Form::hyperbolic(Ring::R, FormKind::Skew, 1).unwrap();
        let e1 = Matrix::from_i64(Ring::R, &[&[1], &[0]]);
        let e2 = Matrix::from_i64(Ring::R, &[&[0], &[1]]);
        assert_eq!(b.evaluate(&e1, &e2).unwrap(), -b.evaluate(&e2, &e1).unwrap());
    }

    #[test]
    fn quaternionic_pairing_of_i_and_j() {
        let b = Form::signature(Ring::H, 1, 0).unwrap();
        let v = vec_of(Ring::H, vec![Scalar::i()]);
        let w = vec_of(Ring::H, vec![Scalar::j()]);
        // conj(j)·i = −j·i = k
        assert_eq!(b.evaluate(&v, &w).unwrap(), Scalar::k());
    }

    #[test]
    fn inertia_examples() {
        assert_eq!(Form::signature(Ring::R, 1, 1).unwrap().inertia().unwrap(), (1, 1));
        assert_eq!(Form::signature(Ring::C, 3, 0).unwrap().inertia().unwrap(), (3, 0));
        let hyp = Form::hyperbolic(Ring::R, FormKind::Symmetric, 1).unwrap();
        assert_eq!(hyp.inertia().unwrap(), (1, 1));
        let (_, diag) = diagonalize(hyp.gram(), false);
        // the elimination lands on diag(2, −1/2)
        assert_eq!(diag, vec![Scalar::from_i64(Ring::R, 2), Scalar::from_ratio(Ring::R, -1, 2)]);
    }

    #[test]
    fn skew_and_quaternionic_antihermitian_have_no_inertia() {
        let skew = Form::hyperbolic(Ring::R, FormKind::Skew, 1).unwrap();
        assert!(matches!(skew.inertia(), Err(Error::WrongKind(_))));
        let ah = Form::antihermitian_quaternionic(2).unwrap();
        assert!(matches!(ah.inertia(), Err(Error::WrongKind(_))));
    }

    #[test]
    fn isotropy_examples() {
        let skew = Form::hyperbolic(Ring::R, FormKind::Skew, 1).unwrap();
        assert!(skew.is_isotropic(&Subspace::zero(Ring::R, 2)));
        assert!(skew.is_isotropic(&Subspace::coordinate(Ring::R, 2, &[0])));
        let h = Form::signature(Ring::C, 1, 1).unwrap();
        let diag = Subspace::canonicalize(&Matrix::from_i64(Ring::C, &[&[1], &[1]]));
        assert!(h.is_isotropic(&diag));
        assert!(!h.is_isotropic(&Subspace::coordinate(Ring::C, 2, &[0])));
    }

    #[test]
    fn split_criteria() {
        assert!(Form::hyperbolic(Ring::R, FormKind::Skew, 3).unwrap().split_basis().is_ok());
        assert!(matches!(
            Form::signature(Ring::C, 2, 1).unwrap().split_basis(),
            Err(Error::NotSplit)
        ));
        let sym3 = Form::new(Ring::C, FormKind::Symmetric, Matrix::identity(Ring::C, 3)).unwrap();
        assert!(matches!(sym3.split_basis(), Err(Error::NotSplit)));
    }

    fn check_split(b: &Form) {
        let (e, f) = b.split_basis().unwrap();
        let m = b.dim() / 2;
        assert!(b.pair_gram(&e, &e).is_zero());
        assert!(b.pair_gram(&f, &f).is_zero());
        // pair_gram(e, f)[l][k] = B(e_k, f_l)
        assert_eq!(b.pair_gram(&e, &f), Matrix::identity(b.ring(), m));
    }

    #[test]
    fn split_bases_of_canonical_models() {
        check_split(&Form::hyperbolic(Ring::R, FormKind::Symmetric, 2).unwrap());
        check_split(&Form::hyperbolic(Ring::C, FormKind::Skew, 2).unwrap());
        check_split(&Form::signature(Ring::R, 2, 2).unwrap());
        check_split(&Form::signature(Ring::C, 1, 1).unwrap());
        check_split(&Form::signature(Ring::H, 2, 2).unwrap());
        check_split(&Form::new(Ring::C, FormKind::Symmetric, Matrix::identity(Ring::C, 4)).unwrap());
        check_split(&Form::antihermitian_quaternionic(2).unwrap());
        check_split(&Form::antihermitian_quaternionic(4).unwrap());
        check_split(&Form::hyperbolic(Ring::C, FormKind::Antihermitian, 2).unwrap());
    }

    #[test]
    fn congruence_examples() {
        let s1 = Form::hyperbolic(Ring::R, FormKind::Skew, 2).unwrap();
        let s2 = s1.pullback(&Matrix::from_i64(
            Ring::R,
            &[&[1, 2, 0, 0], &[0, 1, 0, 0], &[0, 0, 3, 0], &[1, 0, 0, 1]],
        ))
        .unwrap();
        assert!(s1.congruent(&s2).unwrap());
        let pos = Form::signature(Ring::C, 2, 0).unwrap();
        let mixed = Form::signature(Ring::C, 1, 1).unwrap();
        assert!(!pos.congruent(&mixed).unwrap());
        let plus = Form::antihermitian_quaternionic(2).unwrap();
        let minus = Form::new(Ring::H, FormKind::Antihermitian, Matrix::scalar(2, &-Scalar::j())).unwrap();
        assert!(plus.congruent(&minus).unwrap());
        // explicit witness: T = i·I, T*·diag(j, j)·T = diag(−j, −j)
        let t = Matrix::scalar(2, &Scalar::i().promote(Ring::H));
        assert_eq!(plus.pullback_gram(&t), *minus.gram());
    }

    #[test]
    fn rejected_types() {
        assert!(FormType::new(Ring::H, FormKind::Symmetric).is_err());
        assert!(FormType::new(Ring::R, FormKind::Hermitian).is_err());
        assert!(Form::new(Ring::R, FormKind::Symmetric, Matrix::from_i64(Ring::R, &[&[0, 1], &[2, 0]])).is_err());
        assert!(Form::new(Ring::R, FormKind::Symmetric, Matrix::zeros(Ring::R, 2, 2)).is_err());
    }

    #[test]
    fn orthogonal_complement_of_isotropic_line() {
        let b = Form::hyperbolic(Ring::R, FormKind::Symmetric, 2).unwrap();
        let line = Subspace::coordinate(Ring::R, 4, &[0]);
        let perp = b.orthogonal_complement(&line);
        assert_eq!(perp, Subspace::coordinate(Ring::R, 4, &[0, 1, 3]));
    }
}
