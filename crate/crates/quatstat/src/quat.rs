//! Quaternion scalars and the three imaginary axes.
//!
//! A quaternion is written `q = a + b i + c j + d k` with the usual Hamilton
//! rules `ij = -ji = k`, `jk = -kj = i`, `ki = -ik = j`, `i^2 = j^2 = k^2 = -1`.
//! Besides the full conjugate, the algebra carries three involutions
//! `q^alpha = -alpha q alpha` (one per imaginary axis) and three partial
//! conjugates `q^{alpha*}` which flip only the `alpha` component. These six
//! maps are what the widely linear covariance structure is built from.

use num_complex::Complex64;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::error::{Error, Result};

/// One of the three imaginary units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum Axis {
    I,
    J,
    K,
}

impl Axis {
    /// All axes, in `i, j, k` order.
    pub const ALL: [Axis; 3] = [Axis::I, Axis::J, Axis::K];

    /// The imaginary unit itself as a quaternion.
    #[inline]
    pub fn unit(self) -> Quaternion {
        match self {
            Axis::I => Quaternion::new(0.0, 1.0, 0.0, 0.0),
            Axis::J => Quaternion::new(0.0, 0.0, 1.0, 0.0),
            Axis::K => Quaternion::new(0.0, 0.0, 0.0, 1.0),
        }
    }

    /// The other two axes in cyclic order: `i -> (j, k)`, `j -> (k, i)`, `k -> (i, j)`.
    #[inline]
    pub fn others(self) -> (Axis, Axis) {
        match self {
            Axis::I => (Axis::J, Axis::K),
            Axis::J => (Axis::K, Axis::I),
            Axis::K => (Axis::I, Axis::J),
        }
    }

    /// The axis distinct from both arguments. Panics if they coincide.
    #[inline]
    pub fn third(a: Axis, b: Axis) -> Axis {
        match (a, b) {
            (Axis::I, Axis::J) | (Axis::J, Axis::I) => Axis::K,
            (Axis::J, Axis::K) | (Axis::K, Axis::J) => Axis::I,
            (Axis::K, Axis::I) | (Axis::I, Axis::K) => Axis::J,
            _ => panic!("Axis::third requires two distinct axes"),
        }
    }

    /// Index 0/1/2 for `i/j/k`, used to address per-axis arrays.
    #[inline]
    pub fn index(self) -> usize {
        match self {
            Axis::I => 0,
            Axis::J => 1,
            Axis::K => 2,
        }
    }

    pub fn parse(s: &str) -> Result<Axis> {
        match s.trim().to_ascii_lowercase().as_str() {
            "i" => Ok(Axis::I),
            "j" => Ok(Axis::J),
            "k" => Ok(Axis::K),
            other => Err(Error::Domain(format!(
                "unknown axis {other:?}, expected one of i, j, k"
            ))),
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Axis::I => write!(f, "i"),
            Axis::J => write!(f, "j"),
            Axis::K => write!(f, "k"),
        }
    }
}

/// A quaternion `a + b i + c j + d k`.
#[derive(Clone, Copy, Debug, Default, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct Quaternion {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
}

pub const ZERO: Quaternion = Quaternion { a: 0.0, b: 0.0, c: 0.0, d: 0.0 };
pub const ONE: Quaternion = Quaternion { a: 1.0, b: 0.0, c: 0.0, d: 0.0 };

impl Quaternion {
    #[inline]
    pub const fn new(a: f64, b: f64, c: f64, d: f64) -> Self {
        Quaternion { a, b, c, d }
    }

    #[inline]
    pub const fn from_real(a: f64) -> Self {
        Quaternion { a, b: 0.0, c: 0.0, d: 0.0 }
    }

    #[inline]
    pub const fn zero() -> Self {
        ZERO
    }

    #[inline]
    pub const fn one() -> Self {
        ONE
    }

    /// Real part.
    #[inline]
    pub fn re(self) -> f64 {
        self.a
    }

    /// The component along `axis`.
    #[inline]
    pub fn component(self, axis: Axis) -> f64 {
        match axis {
            Axis::I => self.b,
            Axis::J => self.c,
            Axis::K => self.d,
        }
    }

    #[inline]
    pub fn set_component(&mut self, axis: Axis, value: f64) {
        match axis {
            Axis::I => self.b = value,
            Axis::J => self.c = value,
            Axis::K => self.d = value,
        }
    }

    /// Squared modulus `a^2 + b^2 + c^2 + d^2`.
    #[inline]
    pub fn norm_sqr(self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d
    }

    /// Modulus `|q|`.
    #[inline]
    pub fn modulus(self) -> f64 {
        self.norm_sqr().sqrt()
    }

    /// Full conjugate `q* = a - b i - c j - d k`.
    #[inline]
    pub fn conj(self) -> Self {
        Quaternion::new(self.a, -self.b, -self.c, -self.d)
    }

    /// Involution `q^alpha = -alpha q alpha`: keeps the real and `alpha`
    /// components, negates the other two imaginary components.
    #[inline]
    pub fn involution(self, axis: Axis) -> Self {
        match axis {
            Axis::I => Quaternion::new(self.a, self.b, -self.c, -self.d),
            Axis::J => Quaternion::new(self.a, -self.b, self.c, -self.d),
            Axis::K => Quaternion::new(self.a, -self.b, -self.c, self.d),
        }
    }

    /// Partial conjugate `q^{alpha*}`: negates only the `alpha` component.
    #[inline]
    pub fn axis_conj(self, axis: Axis) -> Self {
        match axis {
            Axis::I => Quaternion::new(self.a, -self.b, self.c, self.d),
            Axis::J => Quaternion::new(self.a, self.b, -self.c, self.d),
            Axis::K => Quaternion::new(self.a, self.b, self.c, -self.d),
        }
    }

    /// `q^{alpha H}` for scalars reduces to `q^{alpha*}` composed with nothing
    /// else; kept for symmetry with the matrix operator.
    #[inline]
    pub fn alpha_conj_involution(self, axis: Axis) -> Self {
        self.involution(axis).conj()
    }

    #[inline]
    pub fn scale(self, s: f64) -> Self {
        Quaternion::new(self.a * s, self.b * s, self.c * s, self.d * s)
    }

    /// Multiplicative inverse `q* / |q|^2`.
    pub fn inverse(self) -> Result<Self> {
        let n = self.norm_sqr();
        if n == 0.0 {
            return Err(Error::Domain("inverse of zero quaternion".into()));
        }
        Ok(self.conj().scale(1.0 / n))
    }

    /// True when every component is finite.
    #[inline]
    pub fn is_finite(self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite() && self.d.is_finite()
    }

    /// Absolute-plus-relative comparison with the crate default tolerance.
    pub fn approx_eq(self, other: Self, tol: Tolerance) -> bool {
        let scale = self.modulus().max(other.modulus());
        (self - other).modulus() <= tol.abs + tol.rel * scale
    }

    /// Unit-quaternion square root. For `q = -|q|` (no imaginary part to pick
    /// a plane from) the root is taken along `fallback_axis`.
    pub fn unit_sqrt(self, fallback_axis: Axis) -> Quaternion {
        let m = self.modulus();
        if m == 0.0 {
            return ONE;
        }
        let u = self.scale(1.0 / m);
        let shifted = u + ONE;
        let n = shifted.modulus();
        if n <= 1e-8 {
            // u = -1: any unit imaginary squares to -1.
            fallback_axis.unit()
        } else {
            shifted.scale(1.0 / n)
        }
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }
}

impl AddAssign for Quaternion {
    #[inline]
    fn add_assign(&mut self, rhs: Quaternion) {
        self.a += rhs.a;
        self.b += rhs.b;
        self.c += rhs.c;
        self.d += rhs.d;
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)
    }
}

impl SubAssign for Quaternion {
    #[inline]
    fn sub_assign(&mut self, rhs: Quaternion) {
        self.a -= rhs.a;
        self.b -= rhs.b;
        self.c -= rhs.c;
        self.d -= rhs.d;
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.a, -self.b, -self.c, -self.d)
    }
}

/// Hamilton product.
impl Mul for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, r: Quaternion) -> Quaternion {
        Quaternion::new(
            self.a * r.a - self.b * r.b - self.c * r.c - self.d * r.d,
            self.a * r.b + self.b * r.a + self.c * r.d - self.d * r.c,
            self.a * r.c - self.b * r.d + self.c * r.a + self.d * r.b,
            self.a * r.d + self.b * r.c - self.c * r.b + self.d * r.a,
        )
    }
}

impl Mul<f64> for Quaternion {
    type Output = Quaternion;
    #[inline]
    fn mul(self, s: f64) -> Quaternion {
        self.scale(s)
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {}", self.a, self.b, self.c, self.d)
    }
}

/// Absolute-plus-relative tolerance used by approximate comparisons.
#[derive(Clone, Copy, Debug)]
pub struct Tolerance {
    pub abs: f64,
    pub rel: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { abs: 1e-12, rel: 1e-10 }
    }
}

/// Sign of the product `plane * wing` relative to the remaining axis:
/// `+1` when `(plane, wing)` is in cyclic order `(i,j), (j,k), (k,i)`.
fn cyclic_sign(plane: Axis, wing: Axis) -> f64 {
    match (plane, wing) {
        (Axis::I, Axis::J) | (Axis::J, Axis::K) | (Axis::K, Axis::I) => 1.0,
        _ => -1.0,
    }
}

/// Cayley-Dickson split `q = z1 + z2 * wing`, with `z1, z2` complex numbers
/// in the plane spanned by `{1, plane}`.
///
/// The returned `Complex64` values use `im` for the `plane` component.
pub fn cayley_dickson_split(
    q: Quaternion,
    plane: Axis,
    wing: Axis,
) -> Result<(Complex64, Complex64)> {
    if plane == wing {
        return Err(Error::InvalidAxes { plane, wing });
    }
    let gamma = Axis::third(plane, wing);
    let s = cyclic_sign(plane, wing);
    let z1 = Complex64::new(q.re(), q.component(plane));
    let z2 = Complex64::new(q.component(wing), s * q.component(gamma));
    Ok((z1, z2))
}

/// Inverse of [`cayley_dickson_split`]: `q = z1 + z2 * wing`.
pub fn cayley_dickson_join(
    z1: Complex64,
    z2: Complex64,
    plane: Axis,
    wing: Axis,
) -> Result<Quaternion> {
    if plane == wing {
        return Err(Error::InvalidAxes { plane, wing });
    }
    let mut q = Quaternion::zero();
    q.a = z1.re;
    q.set_component(plane, z1.im);
    let gamma = Axis::third(plane, wing);
    let s = cyclic_sign(plane, wing);
    q.set_component(wing, z2.re);
    q.set_component(gamma, s * z2.im);
    Ok(q)
}
