//! Exact arithmetic for virtual classes: integer polynomials in the Lefschetz
//! motive `q`, plus the standard group motives [GL_r], [SL_r], [PGL_r], [Aⁿ].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An integer polynomial in `q`, stored densely with ascending coefficients.
///
/// Invariants: no trailing zero coefficient; the zero polynomial is the empty
/// coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MotivePoly {
    coeffs: Vec<BigInt>,
}

/// The families of group motives with closed forms in the Grothendieck ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Gl,
    Sl,
    Pgl,
    /// Affine space of the given dimension, [Aʳ] = qʳ.
    Affine,
}

impl MotivePoly {
    pub fn zero() -> Self {
        MotivePoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        MotivePoly::constant(1)
    }

    /// The Lefschetz motive q itself.
    pub fn q() -> Self {
        MotivePoly::monomial(1, BigInt::one())
    }

    pub fn constant(c: i64) -> Self {
        MotivePoly::from_coeffs(vec![BigInt::from(c)])
    }

    pub fn monomial(degree: usize, coeff: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        MotivePoly::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        MotivePoly { coeffs }
    }

    /// Ascending coefficients (empty for the zero polynomial).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scalar_mul(&self, s: &BigInt) -> Self {
        if s.is_zero() {
            return MotivePoly::zero();
        }
        MotivePoly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn scalar_mul_i64(&self, s: i64) -> Self {
        self.scalar_mul(&BigInt::from(s))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MotivePoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns the quotient when `self = quotient * den` over
    /// ℤ[q], and `NonExactDivision` otherwise.
    pub fn exact_div(&self, den: &MotivePoly) -> Result<MotivePoly> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(MotivePoly::zero());
        }
        let dd = den.coeffs.len() - 1;
        let lead = &den.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() < den.coeffs.len() {
            return Err(Error::NonExactDivision);
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let top = rem[i + dd].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return Err(Error::NonExactDivision);
            }
            let c = top / lead;
            for (k, dc) in den.coeffs.iter().enumerate() {
                rem[i + k] -= &c * dc;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision);
        }
        Ok(MotivePoly::from_coeffs(quot))
    }

    /// Horner evaluation at an integer point.
    pub fn eval_at(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Adams operation: substitutes q ↦ q^k.
    pub fn adams(&self, k: usize) -> Self {
        assert!(k >= 1, "adams requires k >= 1");
        if self.is_zero() {
            return MotivePoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        MotivePoly { coeffs }
    }

    /// Standard group motives: [GL_r] = ∏_{i=0}^{r−1}(qʳ − qⁱ),
    /// [SL_r] = [PGL_r] = [GL_r]/(q−1), [Aʳ] = qʳ, and [GL_0] = 1.
    pub fn group_motive(kind: GroupKind, r: u32) -> Self {
        match kind {
            GroupKind::Affine => MotivePoly::monomial(r as usize, BigInt::one()),
            GroupKind::Gl => {
                let mut acc = MotivePoly::one();
                for i in 0..r {
                    let term = MotivePoly::monomial(r as usize, BigInt::one())
                        - MotivePoly::monomial(i as usize, BigInt::one());
                    acc = &acc * &term;
                }
                acc
            }
            GroupKind::Sl | GroupKind::Pgl => {
                if r == 0 {
                    return MotivePoly::one();
                }
                let q_minus_1 = MotivePoly::q() - MotivePoly::one();
                MotivePoly::group_motive(GroupKind::Gl, r)
                    .exact_div(&q_minus_1)
                    .expect("(q - 1) divides [GL_r] for r >= 1")
            }
        }
    }

    /// Descending-degree LaTeX rendering, e.g. `q^{4} - 2q^{3} - q^{2} + 2q`.
    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || deg == 0;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            match deg {
                0 => {}
                1 => out.push('q'),
                _ => {
                    if latex {
                        out.push_str(&format!("q^{{{deg}}}"));
                    } else {
                        out.push_str(&format!("q^{deg}"));
                    }
                }
            }
        }
        out
    }
}

/// Exact evaluation of Σ num_i/den_i · p_i with integer result.
///
/// The sum is accumulated over a common denominator and divided out at the
/// end; a nonzero remainder is reported as `NonExactDivision`.
pub fn scaled_sum(terms: &[(i64, i64, MotivePoly)]) -> Result<MotivePoly> {
    let mut lcm: i64 = 1;
    for &(_, den, _) in terms {
        assert!(den > 0, "scaled_sum denominators must be positive");
        lcm = num_integer::lcm(lcm, den);
    }
    let mut acc = MotivePoly::zero();
    for (num, den, p) in terms {
        acc = &acc + &p.scalar_mul_i64(num * (lcm / den));
    }
    acc.exact_div(&MotivePoly::constant(lcm))
}

impl Add for &MotivePoly {
    type Output = MotivePoly;
    fn add(self, rhs: &MotivePoly) -> MotivePoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        MotivePoly::from_coeffs(coeffs)
    }
}

impl Sub for &MotivePoly {
    type Output = MotivePoly;
    fn sub(self, rhs: &MotivePoly) -> MotivePoly {
        self + &(-rhs)
    }
}

impl Neg for &MotivePoly {
    type Output = MotivePoly;
    fn neg(self) -> MotivePoly {
        MotivePoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &MotivePoly {
    type Output = MotivePoly;
    fn mul(self, rhs: &MotivePoly) -> MotivePoly {
        if self.is_zero() || rhs.is_zero() {
            return MotivePoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        MotivePoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($($trait:ident :: $method:ident),*) => {$(
        impl $trait for MotivePoly {
            type Output = MotivePoly;
            fn $method(self, rhs: MotivePoly) -> MotivePoly {
                $trait::$method(&self, &rhs)
            }
        }
    )*};
}
forward_owned_binop!(Add::add, Sub::sub, Mul::mul);

impl Neg for MotivePoly {
    type Output = MotivePoly;
    fn neg(self) -> MotivePoly {
        -&self
    }
}

impl fmt::Display for MotivePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// Parses plain descending or ascending text like `q^4 - 2q^3 + 2q - 1`.
impl FromStr for MotivePoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<MotivePoly> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Invalid("empty polynomial".into()));
        }
        let mut acc = MotivePoly::zero();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let neg = match rest.as_bytes()[0] {
                b'-' => {
                    rest = &rest[1..];
                    true
                }
                b'+' => {
                    rest = &rest[1..];
                    false
                }
                _ => false,
            };
            let digits = rest.len() - rest.trim_start_matches(|c: char| c.is_ascii_digit()).len();
            let mut coeff = if digits > 0 {
                let c: BigInt = rest[..digits]
                    .parse()
                    .map_err(|_| Error::Invalid(format!("bad coefficient in {s:?}")))?;
                rest = &rest[digits..];
                c
            } else {
                BigInt::one()
            };
            rest = rest.strip_prefix('*').unwrap_or(rest);
            let mut deg = 0usize;
            if let Some(r) = rest.strip_prefix('q') {
                rest = r;
                deg = 1;
                if let Some(r) = rest.strip_prefix('^') {
                    let d = r.len() - r.trim_start_matches(|c: char| c.is_ascii_digit()).len();
                    if d == 0 {
                        return Err(Error::Invalid(format!("missing exponent in {s:?}")));
                    }
                    deg = r[..d]
                        .parse()
                        .map_err(|_| Error::Invalid(format!("bad exponent in {s:?}")))?;
                    rest = &r[d..];
                }
            } else if digits == 0 {
                return Err(Error::Invalid(format!("unexpected token in {s:?}")));
            }
            if neg {
                coeff = -coeff;
            }
            acc = &acc + &MotivePoly::monomial(deg, coeff);
        }
        Ok(acc)
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    variable: String,
    coefficients: Vec<String>,
}

impl Serialize for MotivePoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr {
            variable: "q".to_string(),
            coefficients: self.coeffs.iter().map(|c| c.to_string()).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MotivePoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyRepr::deserialize(deserializer)?;
        if repr.variable != "q" {
            return Err(D::Error::custom(format!(
                "unsupported variable {:?}",
                repr.variable
            )));
        }
        let coeffs = repr
            .coefficients
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(MotivePoly::from_coeffs(coeffs))
    }
}
