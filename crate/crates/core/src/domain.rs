//! Exact scalar arithmetic for the coefficient domains.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A coefficient domain. Modular kinds carry their modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Domain {
    /// Residues modulo m.
    ModInt(u64),
    /// Non-negative integers.
    NonnegInt,
    /// Non-negative rationals.
    NonnegRational,
    /// Pairs a+bi of non-negative rationals, addition only.
    NonnegComplex,
    /// Elements bI with b a residue modulo m.
    PureNeutroMod(u64),
    /// Elements a+bI with a, b residues modulo m.
    NeutroMod(u64),
    /// Elements bI with b non-negative; `integral` restricts b to integers.
    PureNeutroNonneg { integral: bool },
    /// Elements a+bI with a, b non-negative; `integral` restricts both to integers.
    NeutroNonneg { integral: bool },
    /// Rationals r with 0 <= r <= 1.
    FuzzyUnit,
}

/// A scalar of some domain: `real + neutro*I`.
///
/// Modular domains use `Residue`; every other domain uses `Exact`. For the
/// complex domain the second component is the imaginary part.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Residue { real: u64, neutro: u64 },
    Exact { real: BigRational, neutro: BigRational },
}

impl Element {
    pub fn residue(real: u64, neutro: u64) -> Self {
        Element::Residue { real, neutro }
    }

    pub fn exact(real: BigRational, neutro: BigRational) -> Self {
        Element::Exact { real, neutro }
    }

    pub fn rational(real: BigRational) -> Self {
        Element::Exact { real, neutro: BigRational::zero() }
    }

    pub fn int(value: u64) -> Self {
        Element::rational(BigRational::from_integer(BigInt::from(value)))
    }

    pub fn ratio(numer: u64, denom: u64) -> Self {
        Element::rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    /// Real part as an exact rational.
    pub fn real_part(&self) -> BigRational {
        match self {
            Element::Residue { real, .. } => BigRational::from_integer(BigInt::from(*real)),
            Element::Exact { real, .. } => real.clone(),
        }
    }

    /// Neutrosophic (or imaginary) part as an exact rational.
    pub fn neutro_part(&self) -> BigRational {
        match self {
            Element::Residue { neutro, .. } => BigRational::from_integer(BigInt::from(*neutro)),
            Element::Exact { neutro, .. } => neutro.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Residue { real, neutro } => *real == 0 && *neutro == 0,
            Element::Exact { real, neutro } => real.is_zero() && neutro.is_zero(),
        }
    }
}

fn mod_mul(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn mod_add(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 + b as u128) % m as u128) as u64
}

fn render_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidInput(format!("malformed number '{text}'"));
    let digits = |s: &str| -> Result<BigInt> {
        if s.is_empty() || !s.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        s.parse::<BigInt>().map_err(|_| bad())
    };
    match text.split_once('/') {
        Some((p, q)) => {
            let (p, q) = (digits(p.trim())?, digits(q.trim())?);
            if q.is_zero() {
                return Err(Error::InvalidInput(format!("zero denominator in '{text}'")));
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from_integer(digits(text)?)),
    }
}

fn reduce_mod(r: &BigRational, m: u64, text: &str) -> Result<u64> {
    if !r.is_integer() {
        return Err(Error::InvalidInput(format!("'{text}' is not an integer residue modulo {m}")));
    }
    let n = r.numer().to_biguint().expect("parsed numbers are non-negative");
    Ok((n % BigUint::from(m)).to_u64().expect("residue fits"))
}

impl Domain {
    pub fn modulus(&self) -> Option<u64> {
        match *self {
            Domain::ModInt(m) | Domain::PureNeutroMod(m) | Domain::NeutroMod(m) => Some(m),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.modulus().is_some()
    }

    pub fn is_neutrosophic(&self) -> bool {
        matches!(
            self,
            Domain::PureNeutroMod(_)
                | Domain::NeutroMod(_)
                | Domain::PureNeutroNonneg { .. }
                | Domain::NeutroNonneg { .. }
        )
    }

    pub fn is_pure_neutrosophic(&self) -> bool {
        matches!(self, Domain::PureNeutroMod(_) | Domain::PureNeutroNonneg { .. })
    }

    pub fn has_add(&self) -> bool {
        !matches!(self, Domain::FuzzyUnit)
    }

    pub fn has_mul(&self) -> bool {
        !matches!(self, Domain::NonnegComplex)
    }

    pub fn is_ordered(&self) -> bool {
        matches!(self, Domain::NonnegInt | Domain::NonnegRational | Domain::FuzzyUnit)
    }

    /// Number of elements of a finite domain.
    pub fn size(&self) -> Option<u128> {
        match *self {
            Domain::ModInt(m) | Domain::PureNeutroMod(m) => Some(m as u128),
            Domain::NeutroMod(m) => Some(m as u128 * m as u128),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        match self.modulus() {
            Some(m) if m < 2 => Err(Error::InvalidInput(format!("modulus must be at least 2, got {m}"))),
            _ => Ok(()),
        }
    }

    pub fn zero(&self) -> Element {
        if self.is_finite() {
            Element::residue(0, 0)
        } else {
            Element::int(0)
        }
    }

    /// Multiplicative identity, when the domain has one.
    pub fn one(&self) -> Option<Element> {
        match *self {
            Domain::ModInt(_) | Domain::NeutroMod(_) => Some(Element::residue(1, 0)),
            Domain::PureNeutroMod(_) => Some(Element::residue(0, 1)),
            Domain::PureNeutroNonneg { .. } => Some(Element::exact(BigRational::zero(), BigRational::one())),
            Domain::NonnegComplex => None,
            _ => Some(Element::int(1)),
        }
    }

    pub fn contains(&self, x: &Element) -> bool {
        match (*self, x) {
            (Domain::ModInt(m), Element::Residue { real, neutro }) => *real < m && *neutro == 0,
            (Domain::PureNeutroMod(m), Element::Residue { real, neutro }) => *real == 0 && *neutro < m,
            (Domain::NeutroMod(m), Element::Residue { real, neutro }) => *real < m && *neutro < m,
            (Domain::NonnegInt, Element::Exact { real, neutro }) => {
                real.is_integer() && !real.is_negative_rational() && neutro.is_zero()
            }
            (Domain::NonnegRational, Element::Exact { real, neutro }) => {
                !real.is_negative_rational() && neutro.is_zero()
            }
            (Domain::NonnegComplex, Element::Exact { real, neutro }) => {
                !real.is_negative_rational() && !neutro.is_negative_rational()
            }
            (Domain::PureNeutroNonneg { integral }, Element::Exact { real, neutro }) => {
                real.is_zero() && !neutro.is_negative_rational() && (!integral || neutro.is_integer())
            }
            (Domain::NeutroNonneg { integral }, Element::Exact { real, neutro }) => {
                !real.is_negative_rational()
                    && !neutro.is_negative_rational()
                    && (!integral || (real.is_integer() && neutro.is_integer()))
            }
            (Domain::FuzzyUnit, Element::Exact { real, neutro }) => {
                !real.is_negative_rational() && *real <= BigRational::one() && neutro.is_zero()
            }
            _ => false,
        }
    }

    pub fn check(&self, x: &Element) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(format!("{x:?} is not an element of {self}")))
        }
    }

    pub fn add(&self, a: &Element, b: &Element) -> Result<Element> {
        if !self.has_add() {
            return Err(Error::Unsupported(format!("{self} is not closed under addition")));
        }
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (Element::Residue { real: r1, neutro: n1 }, Element::Residue { real: r2, neutro: n2 }) => {
                let m = self.modulus().expect("residues only in modular domains");
                Element::residue(mod_add(*r1, *r2, m), mod_add(*n1, *n2, m))
            }
            (Element::Exact { real: r1, neutro: n1 }, Element::Exact { real: r2, neutro: n2 }) => {
                Element::exact(r1 + r2, n1 + n2)
            }
            _ => unreachable!("checked membership"),
        })
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Result<Element> {
        if !self.has_mul() {
            return Err(Error::Unsupported(format!("{self} has no multiplication")));
        }
        self.check(a)?;
        self.check(b)?;
        Ok(match (a, b) {
            (Element::Residue { real: a1, neutro: b1 }, Element::Residue { real: a2, neutro: b2 }) => {
                let m = self.modulus().expect("residues only in modular domains");
                let real = mod_mul(*a1, *a2, m);
                let neutro = mod_add(mod_add(mod_mul(*a1, *b2, m), mod_mul(*b1, *a2, m), m), mod_mul(*b1, *b2, m), m);
                Element::residue(real, neutro)
            }
            (Element::Exact { real: a1, neutro: b1 }, Element::Exact { real: a2, neutro: b2 }) => {
                Element::exact(a1 * a2, a1 * b2 + b1 * a2 + b1 * b2)
            }
            _ => unreachable!("checked membership"),
        })
    }

    /// All elements of a finite domain, real part major, neutrosophic part minor.
    pub fn enumerate(&self) -> Result<Vec<Element>> {
        match *self {
            Domain::ModInt(m) => Ok((0..m).map(|r| Element::residue(r, 0)).collect()),
            Domain::PureNeutroMod(m) => Ok((0..m).map(|n| Element::residue(0, n)).collect()),
            Domain::NeutroMod(m) => Ok((0..m).flat_map(|r| (0..m).map(move |n| Element::residue(r, n))).collect()),
            _ => Err(Error::Unsupported(format!("{self} is infinite and cannot be enumerated"))),
        }
    }

    pub fn compare(&self, a: &Element, b: &Element) -> Result<Ordering> {
        if !self.is_ordered() {
            return Err(Error::Unsupported(format!("{self} has no total order")));
        }
        self.check(a)?;
        self.check(b)?;
        Ok(a.real_part().cmp(&b.real_part()))
    }

    pub fn min_of(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(match self.compare(a, b)? {
            Ordering::Greater => b.clone(),
            _ => a.clone(),
        })
    }

    pub fn max_of(&self, a: &Element, b: &Element) -> Result<Element> {
        Ok(match self.compare(a, b)? {
            Ordering::Less => b.clone(),
            _ => a.clone(),
        })
    }

    /// Additive inverse in a modular domain.
    pub fn neg_mod(&self, a: &Element) -> Result<Element> {
        self.check(a)?;
        match (self.modulus(), a) {
            (Some(m), Element::Residue { real, neutro }) => Ok(Element::residue((m - real) % m, (m - neutro) % m)),
            _ => Err(Error::Unsupported(format!("{self} has no additive inverses"))),
        }
    }

    /// Parses the text grammar `a`, `bI`, `a+bI`, `p/q`, `a+bi`.
    pub fn parse_element(&self, text: &str) -> Result<Element> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::InvalidInput("empty element".into()));
        }
        let unit_char = match self {
            Domain::NonnegComplex => Some('i'),
            d if d.is_neutrosophic() => Some('I'),
            _ => None,
        };
        let mut real = BigRational::zero();
        let mut second = BigRational::zero();
        for term in compact.split('+') {
            match (unit_char, term.strip_suffix(|c| Some(c) == unit_char)) {
                (Some(_), Some(coeff)) => {
                    second += if coeff.is_empty() { BigRational::one() } else { parse_rational(coeff)? };
                }
                _ => real += parse_rational(term)?,
            }
        }
        let element = match self.modulus() {
            Some(m) => Element::residue(reduce_mod(&real, m, text)?, reduce_mod(&second, m, text)?),
            None => Element::exact(real, second),
        };
        self.check(&element).map_err(|_| Error::InvalidInput(format!("'{text}' is not an element of {self}")))?;
        Ok(element)
    }

    pub fn render(&self, x: &Element) -> String {
        let (real, second) = (x.real_part(), x.neutro_part());
        let unit = match self {
            Domain::NonnegComplex => "i",
            d if d.is_neutrosophic() => "I",
            _ => return render_rational(&real),
        };
        let second_text =
            if second.is_one() { unit.to_string() } else { format!("{}{unit}", render_rational(&second)) };
        match (real.is_zero(), second.is_zero()) {
            (true, true) => "0".to_string(),
            (false, true) => render_rational(&real),
            (true, false) => second_text,
            (false, false) => format!("{}+{second_text}", render_rational(&real)),
        }
    }
}

trait NonNegative {
    fn is_negative_rational(&self) -> bool;
}

impl NonNegative for BigRational {
    fn is_negative_rational(&self) -> bool {
        *self < BigRational::zero()
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Domain::ModInt(m) => write!(f, "Z{m}"),
            Domain::NonnegInt => write!(f, "Z+"),
            Domain::NonnegRational => write!(f, "Q+"),
            Domain::NonnegComplex => write!(f, "C+"),
            Domain::PureNeutroMod(m) => write!(f, "Z{m}I"),
            Domain::NeutroMod(m) => write!(f, "N(Z{m})"),
            Domain::PureNeutroNonneg { integral: true } => write!(f, "Z+I"),
            Domain::PureNeutroNonneg { integral: false } => write!(f, "Q+I"),
            Domain::NeutroNonneg { integral: true } => write!(f, "N(Z+)"),
            Domain::NeutroNonneg { integral: false } => write!(f, "N(Q+)"),
            Domain::FuzzyUnit => write!(f, "[0,1]"),
        }
    }
}

impl FromStr for Domain {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.replace('_', "");
        let modulus = |digits: &str| -> Result<u64> {
            digits.parse::<u64>().map_err(|_| Error::InvalidInput(format!("unknown domain '{text}'")))
        };
        let domain = match s.as_str() {
            "Z+" => Domain::NonnegInt,
            "Q+" | "R+" => Domain::NonnegRational,
            "C+" => Domain::NonnegComplex,
            "Z+I" => Domain::PureNeutroNonneg { integral: true },
            "Q+I" | "R+I" => Domain::PureNeutroNonneg { integral: false },
            "N(Z+)" => Domain::NeutroNonneg { integral: true },
            "N(Q+)" | "N(R+)" => Domain::NeutroNonneg { integral: false },
            "[0,1]" | "fuzzy" | "F" => Domain::FuzzyUnit,
            _ => {
                if let Some(inner) = s.strip_prefix("N(Z").and_then(|r| r.strip_suffix(')')) {
                    Domain::NeutroMod(modulus(inner)?)
                } else if let Some(inner) = s.strip_prefix('Z').and_then(|r| r.strip_suffix('I')) {
                    Domain::PureNeutroMod(modulus(inner)?)
                } else if let Some(inner) = s.strip_prefix('Z') {
                    Domain::ModInt(modulus(inner)?)
                } else {
                    return Err(Error::InvalidInput(format!("unknown domain '{text}'")));
                }
            }
        };
        domain.validate()?;
        Ok(domain)
    }
}

impl Serialize for Domain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Domain {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
