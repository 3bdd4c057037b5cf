//! Exact base-field arithmetic.
//!
//! Every scalar lives either in ℚ or in a cyclotomic field ℚ(ζₙ), the latter
//! stored as a residue of degree < φ(n) modulo the n-th cyclotomic polynomial.
//! ℚ is treated as a subfield of every ℚ(ζₙ): a cyclotomic value whose
//! non-constant coefficients vanish is stored as a plain rational, so equality
//! of canonical scalars is structural.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Cyclotomic { order: u32 },
}

impl FieldSpec {
    /// ℚ(ζₙ); orders 1 and 2 collapse to ℚ.
    pub fn cyclotomic(order: u32) -> Result<Self> {
        match order {
            0 => Err(Error::Parse("cyclotomic order must be positive".into())),
            1 | 2 => Ok(FieldSpec::Rational),
            n => Ok(FieldSpec::Cyclotomic { order: n }),
        }
    }

    pub fn canonical(self) -> Self {
        match self {
            FieldSpec::Cyclotomic { order } if order <= 2 => FieldSpec::Rational,
            other => other,
        }
    }

    pub fn order(&self) -> u32 {
        match self.canonical() {
            FieldSpec::Rational => 1,
            FieldSpec::Cyclotomic { order } => order,
        }
    }

    /// Degree of the field over ℚ.
    pub fn degree(&self) -> usize {
        euler_phi(self.order() as u64) as usize
    }

    /// Whether all e-th roots of unity lie in this field.
    pub fn contains_roots_of_unity(&self, e: u32) -> bool {
        let m = self.order();
        e >= 1 && (m % e == 0 || (m % 2 == 1 && (2 * m) % e == 0))
    }

    /// ζₑᵏ as an element of this field.
    pub fn root_of_unity(&self, e: u32, k: i64) -> Result<Scalar> {
        if !self.contains_roots_of_unity(e) {
            return Err(Error::FieldTooSmall(format!(
                "{} does not contain the {}-th roots of unity",
                self, e
            )));
        }
        let m = self.order();
        let k = k.rem_euclid(e as i64);
        if m % e == 0 {
            return Ok(Scalar::zeta(m).pow(k * (m / e) as i64));
        }
        // m odd: ζ_{2m} = -ζ_m^{(m+1)/2}
        let zeta_2m = -Scalar::zeta(m).pow(((m + 1) / 2) as i64);
        Ok(zeta_2m.pow(k * ((2 * m) / e) as i64))
    }

    /// The generator ζₙ of the field (1 for ℚ).
    pub fn generator(&self) -> Scalar {
        Scalar::zeta(self.order())
    }

    /// Whether `s` is an element of this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match s {
            Scalar::Rational(_) => true,
            Scalar::Cyclotomic(c) => c.field.order == self.order(),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.canonical() {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Cyclotomic { order } => write!(f, "Q(zeta_{})", order),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t == "Q" || t.eq_ignore_ascii_case("rational") {
            return Ok(FieldSpec::Rational);
        }
        let inner = t
            .strip_prefix("Q(zeta_")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("cyclotomic:"))
            .ok_or_else(|| Error::Parse(format!("unknown field '{}'", s)))?;
        let n: u32 = inner
            .parse()
            .map_err(|_| Error::Parse(format!("bad cyclotomic order in '{}'", s)))?;
        FieldSpec::cyclotomic(n)
    }
}

fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Precomputed data for ℚ(ζₙ).
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    phi: usize,
    /// x^k reduced modulo Φₙ for k < 2φ - 1.
    powers: Vec<Vec<BigRational>>,
    modulus: Vec<BigRational>,
}

static FIELDS: Lazy<Mutex<HashMap<u32, Arc<CyclotomicField>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

fn cyclotomic_field(order: u32) -> Arc<CyclotomicField> {
    let mut cache = FIELDS.lock().expect("field cache poisoned");
    cache
        .entry(order)
        .or_insert_with(|| Arc::new(CyclotomicField::new(order)))
        .clone()
}

/// Integer coefficients (low degree first) of the n-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<BigInt> {
    // Φₙ = (xⁿ - 1) / ∏_{d | n, d < n} Φ_d
    let mut num: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n % d == 0 {
            let div = cyclotomic_polynomial(d);
            num = exact_int_division(&num, &div);
        }
    }
    num
}

fn exact_int_division(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    // den is monic
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = num.len() - 1 - dn;
    let mut q = vec![BigInt::zero(); qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn].clone();
        if !c.is_zero() {
            for (j, dj) in den.iter().enumerate() {
                rem[i + j] -= &c * dj;
            }
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

impl CyclotomicField {
    fn new(order: u32) -> Self {
        let modulus: Vec<BigRational> = cyclotomic_polynomial(order)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(2 * phi);
        let mut cur = vec![BigRational::zero(); phi];
        cur[0] = BigRational::one();
        for _ in 0..(2 * phi).max(2) {
            powers.push(cur.clone());
            // multiply by x
            let top = cur[phi - 1].clone();
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigRational::zero();
            if !top.is_zero() {
                for (i, c) in cur.iter_mut().enumerate() {
                    *c -= &top * &modulus[i];
                }
            }
        }
        CyclotomicField {
            order,
            phi,
            powers,
            modulus,
        }
    }

    fn reduce_product(&self, prod: Vec<BigRational>) -> Vec<BigRational> {
        let mut out: Vec<BigRational> = prod.iter().take(self.phi).cloned().collect();
        out.resize(self.phi, BigRational::zero());
        for (k, c) in prod.iter().enumerate().skip(self.phi) {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.powers[k]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        out
    }
}

/// An element of ℚ(ζₙ) that is not rational.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}
impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order.hash(state);
        self.coeffs.hash(state);
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Scalar::Cyclotomic(self.clone()))
    }
}

/// An exact scalar in ℚ or ℚ(ζₙ), always in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Cyclotomic(Cyclotomic),
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::Rational(v)
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rational(BigRational::one())
    }

    pub fn int(v: i64) -> Self {
        Scalar::from(v)
    }

    /// p/q; panics on q = 0.
    pub fn ratio(p: i64, q: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    /// The primitive root of unity ζₙ = e^{2πi/n}, as the class of x.
    pub fn zeta(order: u32) -> Self {
        match order {
            0 | 1 => Scalar::one(),
            2 => Scalar::int(-1),
            n => {
                let field = cyclotomic_field(n);
                let mut coeffs = vec![BigRational::zero(); field.phi];
                if field.phi == 1 {
                    // unreachable for n > 2, kept for completeness
                    coeffs[0] = -field.modulus[0].clone();
                } else {
                    coeffs[1] = BigRational::one();
                }
                Scalar::from_coeffs(&field, coeffs)
            }
        }
    }

    fn from_coeffs(field: &Arc<CyclotomicField>, coeffs: Vec<BigRational>) -> Self {
        if coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Scalar::Rational(coeffs.into_iter().next().unwrap_or_else(BigRational::zero))
        } else {
            Scalar::Cyclotomic(Cyclotomic {
                field: field.clone(),
                coeffs,
            })
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Cyclotomic(_) => false,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Cyclotomic(_) => false,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Cyclotomic(_) => None,
        }
    }

    /// The cyclotomic order this scalar requires (None for rationals).
    pub fn field_order(&self) -> Option<u32> {
        match self {
            Scalar::Rational(_) => None,
            Scalar::Cyclotomic(c) => Some(c.field.order),
        }
    }

    /// Small-integer view, when the scalar is an integer fitting in i64.
    pub fn to_i64(&self) -> Option<i64> {
        self.as_rational()
            .filter(|r| r.is_integer())
            .and_then(|r| r.to_integer().to_i64())
    }

    fn shared_field(a: &Scalar, b: &Scalar) -> Result<Option<Arc<CyclotomicField>>> {
        match (a, b) {
            (Scalar::Rational(_), Scalar::Rational(_)) => Ok(None),
            (Scalar::Cyclotomic(c), Scalar::Rational(_))
            | (Scalar::Rational(_), Scalar::Cyclotomic(c)) => Ok(Some(c.field.clone())),
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => {
                if x.field.order == y.field.order {
                    Ok(Some(x.field.clone()))
                } else {
                    Err(Error::FieldMismatch(format!(
                        "Q(zeta_{}) vs Q(zeta_{})",
                        x.field.order, y.field.order
                    )))
                }
            }
        }
    }

    fn coeff_vec(&self, phi: usize) -> Vec<BigRational> {
        match self {
            Scalar::Rational(r) => {
                let mut v = vec![BigRational::zero(); phi];
                v[0] = r.clone();
                v
            }
            Scalar::Cyclotomic(c) => c.coeffs.clone(),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a + b)),
            _ => {
                let field = Scalar::shared_field(self, other)?.expect("cyclotomic operand");
                let mut v = self.coeff_vec(field.phi);
                match other {
                    Scalar::Rational(r) => v[0] += r,
                    Scalar::Cyclotomic(c) => {
                        for (x, y) in v.iter_mut().zip(&c.coeffs) {
                            *x += y;
                        }
                    }
                }
                Ok(Scalar::from_coeffs(&field, v))
            }
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Cyclotomic(c) => Scalar::Cyclotomic(Cyclotomic {
                field: c.field.clone(),
                coeffs: c.coeffs.iter().map(|x| -x).collect(),
            }),
        }
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(Scalar::Rational(a * b)),
            (Scalar::Rational(r), Scalar::Cyclotomic(c))
            | (Scalar::Cyclotomic(c), Scalar::Rational(r)) => {
                if r.is_zero() {
                    return Ok(Scalar::zero());
                }
                Ok(Scalar::Cyclotomic(Cyclotomic {
                    field: c.field.clone(),
                    coeffs: c.coeffs.iter().map(|x| x * r).collect(),
                }))
            }
            (Scalar::Cyclotomic(x), Scalar::Cyclotomic(y)) => {
                let field = Scalar::shared_field(self, other)?.expect("cyclotomic operand");
                let phi = field.phi;
                let mut prod = vec![BigRational::zero(); 2 * phi - 1];
                for (i, a) in x.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j, b) in y.coeffs.iter().enumerate() {
                        if !b.is_zero() {
                            prod[i + j] += a * b;
                        }
                    }
                }
                Ok(Scalar::from_coeffs(&field, field.reduce_product(prod)))
            }
        }
    }

    /// Multiplicative inverse.
    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Rational(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(r.recip()))
                }
            }
            Scalar::Cyclotomic(c) => {
                let inv = poly_inverse_mod(&c.coeffs, &c.field.modulus);
                let mut v = inv;
                v.resize(c.field.phi, BigRational::zero());
                Ok(Scalar::from_coeffs(&c.field, v))
            }
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Scalar {
        let base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            e >>= 1;
        }
        acc
    }

    /// Parses "p", "p/q", or a polynomial in `z` such as "1-2*z^2".
    pub fn parse(text: &str, field: FieldSpec) -> Result<Scalar> {
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty scalar".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = cleaned.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&cleaned[start..i]);
                start = i;
            }
        }
        terms.push(&cleaned[start..]);
        let mut acc = Scalar::zero();
        for term in terms {
            acc = acc.try_add(&parse_term(term, field, text)?)?;
        }
        Ok(acc)
    }
}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("malformed scalar '{}'", whole));
    if s.is_empty() {
        return Err(bad());
    }
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, q),
        None => (s, "1"),
    };
    let valid = |t: &str| {
        let digits = t.strip_prefix(['+', '-']).unwrap_or(t);
        !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit())
    };
    if !valid(p) || !q.chars().all(|c| c.is_ascii_digit()) || q.is_empty() {
        return Err(bad());
    }
    let p = BigInt::from_str(p).map_err(|_| bad())?;
    let q = BigInt::from_str(q).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in '{}'", whole)));
    }
    Ok(BigRational::new(p, q))
}

fn parse_term(term: &str, field: FieldSpec, whole: &str) -> Result<Scalar> {
    let bad = || Error::Parse(format!("malformed scalar '{}'", whole));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1i64, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    let Some(zpos) = body.find('z') else {
        let r = parse_rational(body, whole)?;
        return Ok(Scalar::Rational(r * BigInt::from(sign)));
    };
    if field.order() == 1 {
        return Err(Error::Parse(format!(
            "'{}' uses z but the field is Q",
            whole
        )));
    }
    let coef_part = body[..zpos].strip_suffix('*').unwrap_or(&body[..zpos]);
    let coef = if coef_part.is_empty() {
        BigRational::one()
    } else {
        parse_rational(coef_part, whole)?
    };
    let rest = &body[zpos + 1..];
    let exp: i64 = if rest.is_empty() {
        1
    } else {
        let e = rest.strip_prefix('^').ok_or_else(bad)?;
        e.parse().map_err(|_| bad())?
    };
    if exp < 0 {
        return Err(bad());
    }
    let z = Scalar::zeta(field.order()).pow(exp);
    Ok(&z * &Scalar::Rational(coef * BigInt::from(sign)))
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", fmt_rational(r)),
            Scalar::Cyclotomic(c) => {
                let mut out = String::new();
                for (k, coef) in c.coeffs.iter().enumerate() {
                    if coef.is_zero() {
                        continue;
                    }
                    let mono = match k {
                        0 => String::new(),
                        1 => "z".to_string(),
                        _ => format!("z^{}", k),
                    };
                    let term = if k == 0 {
                        fmt_rational(coef)
                    } else if coef.is_one() {
                        mono
                    } else if (-coef).is_one() {
                        format!("-{}", mono)
                    } else {
                        format!("{}*{}", fmt_rational(coef), mono)
                    };
                    if !out.is_empty() && !term.starts_with('-') {
                        out.push('+');
                    }
                    out.push_str(&term);
                }
                write!(f, "{}", out)
            }
        }
    }
}

impl Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// --- polynomial helpers over ℚ used for inversion in ℚ(ζₙ) ---

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead = b.last().expect("division by zero polynomial").clone();
    let mut q = vec![BigRational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() / &lead;
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &c * bi;
        }
        q[shift] = c;
        trim(&mut r);
    }
    (q, r)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// s with s·a ≡ 1 (mod m), for a coprime to the irreducible m.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Vec<BigRational> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<BigRational>, Vec<BigRational>) =
        (vec![], vec![BigRational::one()]);
    while r1.len() > 1 {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    // r1 is a nonzero constant
    let c = r1[0].clone();
    let (_, s) = poly_divrem(&s1.iter().map(|x| x / &c).collect::<Vec<_>>(), m);
    s
}

// --- operator plumbing; mixing incompatible cyclotomic fields panics ---

macro_rules! binop {
    ($tr:ident, $method:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).unwrap_or_else(|e| panic!("{}", e))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (&mut *self, rhs) {
            *a += b;
            return;
        }
        *self = &*self + rhs;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self += &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if rhs.is_zero() {
            return;
        }
        if let (Scalar::Rational(a), Scalar::Rational(b)) = (&mut *self, rhs) {
            *a -= b;
            return;
        }
        *self = &*self - rhs;
    }
}

impl SubAssign<Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self -= &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

/// Positive divisors of |n|, ascending; used by rational-root searches.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let other = &n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, r: i64) -> Scalar {
        Scalar::ratio(p, r)
    }

    #[test]
    fn rational_sum() {
        assert_eq!(q(1, 2) + q(1, 3), q(5, 6));
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let z = Scalar::zeta(4);
        assert_eq!(&z * &z, Scalar::int(-1));
    }

    #[test]
    fn zeta3_inverse() {
        let z = Scalar::zeta(3);
        let inv = z.inv().unwrap();
        // ζ₃⁻¹ = ζ₃² = -1-ζ₃
        assert_eq!(inv, Scalar::int(-1) - &z);
        assert_eq!(inv, z.pow(2));
        assert!((&inv * &z).is_one());
    }

    #[test]
    fn division_by_zero() {
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
        assert!(q(1, 2).try_div(&Scalar::zero()).is_err());
    }

    #[test]
    fn field_mismatch() {
        let e = Scalar::zeta(3).try_add(&Scalar::zeta(5));
        assert!(matches!(e, Err(Error::FieldMismatch(_))));
        // rationals embed into every cyclotomic field
        assert!(Scalar::zeta(3).try_add(&q(1, 2)).is_ok());
    }

    #[test]
    fn parse_examples() {
        assert_eq!(Scalar::parse("-3/6", FieldSpec::Rational).unwrap(), q(-1, 2));
        assert_eq!(Scalar::parse("0/5", FieldSpec::Rational).unwrap(), Scalar::zero());
        let f3 = FieldSpec::cyclotomic(3).unwrap();
        assert_eq!(
            Scalar::parse("z^2", f3).unwrap(),
            Scalar::int(-1) - Scalar::zeta(3)
        );
        let f5 = FieldSpec::cyclotomic(5).unwrap();
        let x = Scalar::parse("1-2*z^2", f5).unwrap();
        assert_eq!(x, Scalar::one() - Scalar::int(2) * Scalar::zeta(5).pow(2));
        assert_eq!(Scalar::parse("1/2*z + 3", f5).unwrap().to_string(), "3+1/2*z");
    }

    #[test]
    fn parse_errors() {
        assert!(Scalar::parse("", FieldSpec::Rational).is_err());
        assert!(Scalar::parse("1/0", FieldSpec::Rational).is_err());
        assert!(Scalar::parse("z", FieldSpec::Rational).is_err());
        assert!(Scalar::parse("1//2", FieldSpec::Rational).is_err());
        assert!(Scalar::parse("abc", FieldSpec::Rational).is_err());
    }

    #[test]
    fn field_spec_canonical() {
        assert_eq!(FieldSpec::cyclotomic(2).unwrap(), FieldSpec::Rational);
        assert_eq!(FieldSpec::cyclotomic(1).unwrap(), FieldSpec::Rational);
        assert!(FieldSpec::cyclotomic(0).is_err());
        assert_eq!("Q(zeta_6)".parse::<FieldSpec>().unwrap().degree(), 2);
        assert_eq!(FieldSpec::cyclotomic(12).unwrap().to_string(), "Q(zeta_12)");
    }

    #[test]
    fn cyclotomic_polynomials() {
        let as_i64 = |n| {
            cyclotomic_polynomial(n)
                .iter()
                .map(|c| c.to_i64().unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(as_i64(1), vec![-1, 1]);
        assert_eq!(as_i64(3), vec![1, 1, 1]);
        assert_eq!(as_i64(4), vec![1, 0, 1]);
        assert_eq!(as_i64(6), vec![1, -1, 1]);
        assert_eq!(as_i64(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_in_odd_order_field() {
        // ℚ(ζ₃) contains the 6th roots of unity
        let f = FieldSpec::cyclotomic(3).unwrap();
        let z6 = f.root_of_unity(6, 1).unwrap();
        assert!(z6.pow(6).is_one());
        assert!(!z6.pow(3).is_one());
        assert!(!z6.pow(2).is_one());
        assert!(f.root_of_unity(4, 1).is_err());
    }
}

#[cfg(test)]
mod properties {
    use super::*;
    use proptest::prelude::*;

    fn orders() -> impl Strategy<Value = u32> {
        prop_oneof![Just(1u32), Just(3), Just(4), Just(5), Just(8), Just(12)]
    }

    fn scalar_in(order: u32) -> impl Strategy<Value = Scalar> {
        let phi = euler_phi(order as u64) as usize;
        proptest::collection::vec((-6i64..=6, 1i64..=4), phi).prop_map(move |cs| {
            let z = Scalar::zeta(order);
            cs.iter()
                .enumerate()
                .fold(Scalar::zero(), |acc, (k, (p, r))| {
                    acc + Scalar::ratio(*p, *r) * z.pow(k as i64)
                })
        })
    }

    fn triple() -> impl Strategy<Value = (u32, Scalar, Scalar, Scalar)> {
        orders().prop_flat_map(|n| (Just(n), scalar_in(n), scalar_in(n), scalar_in(n)))
    }

    proptest! {
        #[test]
        fn field_axioms((n, a, b, c) in triple()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
            let field = FieldSpec::cyclotomic(n).unwrap();
            let text = a.to_string();
            prop_assert_eq!(Scalar::parse(&text, field).unwrap(), a);
        }

        #[test]
        fn zeta_has_exact_order(n in 3u32..=16) {
            let z = Scalar::zeta(n);
            prop_assert!(z.pow(n as i64).is_one());
            for d in 1..n {
                prop_assert!(!z.pow(d as i64).is_one());
            }
            let total = (0..n).fold(Scalar::zero(), |acc, k| acc + z.pow(k as i64));
            prop_assert!(total.is_zero());
        }
    }
}
