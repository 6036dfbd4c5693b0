use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The base field of every computation: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

/// Raw field element. The owning [`FieldSpec`] is carried by the container
/// (matrix, subspace, scalar), never by the element itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Elem {
    Q(BigRational),
    P(u64),
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// `GF(p)`; fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) && p < (1 << 62) {
            Ok(FieldSpec::Prime(p))
        } else {
            Err(Error::Field(format!("{p} is not a supported prime")))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }

    /// Number of elements, `None` for ℚ.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldSpec::Rational => None,
            FieldSpec::Prime(p) => Some(*p),
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, FieldSpec::Prime(_))
    }

    pub(crate) fn zero(&self) -> Elem {
        match self {
            FieldSpec::Rational => Elem::Q(BigRational::zero()),
            FieldSpec::Prime(_) => Elem::P(0),
        }
    }

    pub(crate) fn one(&self) -> Elem {
        match self {
            FieldSpec::Rational => Elem::Q(BigRational::one()),
            FieldSpec::Prime(_) => Elem::P(1),
        }
    }

    pub(crate) fn elem_i64(&self, v: i64) -> Elem {
        match self {
            FieldSpec::Rational => Elem::Q(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Elem::P((v.rem_euclid(*p as i64)) as u64),
        }
    }

    /// Element of the prime field indexed by `0..p`; used by enumeration.
    pub(crate) fn elem_index(&self, v: u64) -> Elem {
        match self {
            FieldSpec::Rational => Elem::Q(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::Prime(p) => Elem::P(v % p),
        }
    }

    pub(crate) fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Q(q) => q.is_zero(),
            Elem::P(v) => *v == 0,
        }
    }

    pub(crate) fn is_one(&self, a: &Elem) -> bool {
        match a {
            Elem::Q(q) => q.is_one(),
            Elem::P(v) => *v == 1,
        }
    }

    #[inline]
    pub(crate) fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (FieldSpec::Prime(p), Elem::P(x), Elem::P(y)) => Elem::P((x + y) % p),
            (FieldSpec::Rational, Elem::Q(x), Elem::Q(y)) => Elem::Q(x + y),
            _ => unreachable!("element does not belong to {self}"),
        }
    }

    #[inline]
    pub(crate) fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (FieldSpec::Prime(p), Elem::P(x), Elem::P(y)) => Elem::P((x + p - y) % p),
            (FieldSpec::Rational, Elem::Q(x), Elem::Q(y)) => Elem::Q(x - y),
            _ => unreachable!("element does not belong to {self}"),
        }
    }

    #[inline]
    pub(crate) fn neg(&self, a: &Elem) -> Elem {
        match (self, a) {
            (FieldSpec::Prime(p), Elem::P(x)) => Elem::P((p - x) % p),
            (FieldSpec::Rational, Elem::Q(x)) => Elem::Q(-x),
            _ => unreachable!("element does not belong to {self}"),
        }
    }

    #[inline]
    pub(crate) fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (self, a, b) {
            (FieldSpec::Prime(p), Elem::P(x), Elem::P(y)) => {
                Elem::P(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            (FieldSpec::Rational, Elem::Q(x), Elem::Q(y)) => Elem::Q(x * y),
            _ => unreachable!("element does not belong to {self}"),
        }
    }

    /// `acc += a * b`, the inner-loop operation of every matrix product.
    #[inline]
    pub(crate) fn mul_add_assign(&self, acc: &mut Elem, a: &Elem, b: &Elem) {
        match (self, acc, a, b) {
            (FieldSpec::Prime(p), Elem::P(s), Elem::P(x), Elem::P(y)) => {
                *s = ((*s as u128 + *x as u128 * *y as u128) % *p as u128) as u64;
            }
            (FieldSpec::Rational, Elem::Q(s), Elem::Q(x), Elem::Q(y)) => {
                if !x.is_zero() && !y.is_zero() {
                    *s += x * y;
                }
            }
            _ => unreachable!("element does not belong to {self}"),
        }
    }

    pub(crate) fn inv(&self, a: &Elem) -> Option<Elem> {
        if self.is_zero(a) {
            return None;
        }
        match (self, a) {
            (FieldSpec::Prime(p), Elem::P(x)) => Some(Elem::P(pow_mod(*x, p - 2, *p))),
            (FieldSpec::Rational, Elem::Q(x)) => Some(Elem::Q(x.recip())),
            _ => unreachable!("element does not belong to {self}"),
        }
    }

    pub(crate) fn contains(&self, a: &Elem) -> bool {
        match (self, a) {
            (FieldSpec::Prime(p), Elem::P(x)) => x < p,
            (FieldSpec::Rational, Elem::Q(_)) => true,
            _ => false,
        }
    }

    /// Parses `"3"`, `"-2"`, `"2/3"` into this field.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::Parse(format!("malformed number {text:?} for field {self}"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                n.trim().parse::<BigInt>().map_err(|_| bad())?,
                d.trim().parse::<BigInt>().map_err(|_| bad())?,
            ),
            None => (text.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
        };
        if den.is_zero() {
            return Err(bad());
        }
        let elem = match self {
            FieldSpec::Rational => Elem::Q(BigRational::new(num, den)),
            FieldSpec::Prime(p) => {
                let p_big = BigInt::from(*p);
                let reduce = |v: &BigInt| {
                    let r = ((v % &p_big) + &p_big) % &p_big;
                    r.to_u64().expect("residue fits")
                };
                let d = reduce(&den);
                if d == 0 {
                    return Err(Error::Parse(format!(
                        "denominator of {text:?} vanishes in {self}"
                    )));
                }
                let n = Elem::P(reduce(&num));
                let d_inv = self.inv(&Elem::P(d)).expect("nonzero");
                self.mul(&n, &d_inv)
            }
        };
        Ok(Scalar { field: *self, elem })
    }

    pub(crate) fn fmt_elem(&self, a: &Elem) -> String {
        match a {
            Elem::Q(q) => {
                if q.denom().is_one() {
                    q.numer().to_string()
                } else {
                    format!("{}/{}", q.numer(), q.denom())
                }
            }
            Elem::P(v) => v.to_string(),
        }
    }
}

fn pow_mod(base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u128;
    let mut b = base as u128 % p as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % p as u128;
        }
        b = b * b % p as u128;
        exp >>= 1;
    }
    acc as u64
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q` and `GF(p)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Q" || s == "QQ" {
            return Ok(FieldSpec::Rational);
        }
        let inner = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("unknown field {s:?}; expected Q or GF(p)")))?;
        let p: u64 = inner
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("unknown field {s:?}; expected Q or GF(p)")))?;
        FieldSpec::prime(p)
    }
}

/// A field element together with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    field: FieldSpec,
    pub(crate) elem: Elem,
}

impl Scalar {
    pub fn from_i64(field: FieldSpec, v: i64) -> Self {
        Scalar { field, elem: field.elem_i64(v) }
    }

    pub fn zero(field: FieldSpec) -> Self {
        Scalar { field, elem: field.zero() }
    }

    pub fn one(field: FieldSpec) -> Self {
        Scalar { field, elem: field.one() }
    }

    pub(crate) fn from_elem(field: FieldSpec, elem: Elem) -> Self {
        debug_assert!(field.contains(&elem));
        Scalar { field, elem }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.field.is_zero(&self.elem)
    }

    pub fn is_one(&self) -> bool {
        self.field.is_one(&self.elem)
    }

    fn same_field(&self, other: &Scalar) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(Scalar::from_elem(self.field, self.field.add(&self.elem, &other.elem)))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(Scalar::from_elem(self.field, self.field.sub(&self.elem, &other.elem)))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar> {
        self.same_field(other)?;
        Ok(Scalar::from_elem(self.field, self.field.mul(&self.elem, &other.elem)))
    }

    pub fn neg(&self) -> Scalar {
        Scalar::from_elem(self.field, self.field.neg(&self.elem))
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        self.field.inv(&self.elem).map(|e| Scalar::from_elem(self.field, e))
    }

    pub fn pow(&self, mut exp: u64) -> Scalar {
        let mut acc = self.field.one();
        let mut base = self.elem.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.field.mul(&acc, &base);
            }
            base = self.field.mul(&base, &base);
            exp >>= 1;
        }
        Scalar::from_elem(self.field, acc)
    }

    /// Numerator and denominator of a rational scalar, or the residue for GF(p).
    pub fn to_ratio_string(&self) -> String {
        self.field.fmt_elem(&self.elem)
    }

    /// Is this a negative rational? Always false over GF(p).
    pub fn is_negative(&self) -> bool {
        matches!(&self.elem, Elem::Q(q) if q.is_negative())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.fmt_elem(&self.elem))
    }
}
