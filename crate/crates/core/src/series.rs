//! Exact truncated bivariate power series and the class generating
//! functions.
//!
//! Coefficients are exact rationals on a dense (x-degree, y-degree) grid
//! with hard truncation bounds; all arithmetic is exact for every kept
//! coefficient. The solvers below produce:
//!
//! - `solve_f`: F with [x^n y^k] F = independent sets of size k in the
//!   staircase down-core of size n, from the fixed point of
//!   F = 1 + xF + xyF^2 / (1 - y(F-1));
//! - the smooth family G, P_ind, P (down-cores over 2143-free boundaries);
//! - the updown family R, Q_up/Q_down/Q_ind, Q and the four-pattern family
//!   S_up/S_down/S_ind, S;
//! - the non-intersecting family H, I, J with the length counters
//!   x^b * {F,H,J}(x, x/(1-x));
//! - closed-form expansions of the rational/algebraic class generating
//!   functions for cross-checking.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::comb::{binomial, binomial_signed};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("division requires an invertible constant term")]
    NonInvertibleDivisor,
    #[error("square root requires constant term 1")]
    SqrtConstantTerm,
    #[error("series is not divisible by {0}")]
    NotDivisible(&'static str),
    #[error("substitution requires positive valuation")]
    BadSubstitution,
}

/// Bivariate power series truncated at x-degree `nx` and y-degree `ny`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiSeries {
    nx: usize,
    ny: usize,
    coeffs: Vec<BigRational>, // row-major: (i, j) at i * (ny + 1) + j
}

impl BiSeries {
    pub fn zero(nx: usize, ny: usize) -> Self {
        BiSeries {
            nx,
            ny,
            coeffs: vec![BigRational::zero(); (nx + 1) * (ny + 1)],
        }
    }

    pub fn constant(nx: usize, ny: usize, value: i64) -> Self {
        let mut s = Self::zero(nx, ny);
        s.set(0, 0, BigRational::from_integer(BigInt::from(value)));
        s
    }

    pub fn one(nx: usize, ny: usize) -> Self {
        Self::constant(nx, ny, 1)
    }

    /// The monomial c * x^i y^j.
    pub fn monomial(nx: usize, ny: usize, i: usize, j: usize, c: i64) -> Self {
        let mut s = Self::zero(nx, ny);
        if i <= nx && j <= ny {
            s.set(i, j, BigRational::from_integer(BigInt::from(c)));
        }
        s
    }

    pub fn var_x(nx: usize, ny: usize) -> Self {
        Self::monomial(nx, ny, 1, 0, 1)
    }

    pub fn var_y(nx: usize, ny: usize) -> Self {
        Self::monomial(nx, ny, 0, 1, 1)
    }

    pub fn bounds(&self) -> (usize, usize) {
        (self.nx, self.ny)
    }

    pub fn get(&self, i: usize, j: usize) -> BigRational {
        if i > self.nx || j > self.ny {
            BigRational::zero()
        } else {
            self.coeffs[i * (self.ny + 1) + j].clone()
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigRational) {
        assert!(i <= self.nx && j <= self.ny, "coefficient out of bounds");
        self.coeffs[i * (self.ny + 1) + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn assert_same_bounds(&self, other: &Self) {
        assert_eq!(
            (self.nx, self.ny),
            (other.nx, other.ny),
            "series bounds must agree"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_bounds(other);
        let mut out = self.clone();
        for (c, d) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c += d;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_bounds(other);
        let mut out = self.clone();
        for (c, d) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *c -= d;
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c *= k;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_bounds(other);
        let mut out = Self::zero(self.nx, self.ny);
        for i in 0..=self.nx {
            for j in 0..=self.ny {
                let a = &self.coeffs[i * (self.ny + 1) + j];
                if a.is_zero() {
                    continue;
                }
                for k in 0..=(self.nx - i) {
                    for l in 0..=(self.ny - j) {
                        let b = &other.coeffs[k * (other.ny + 1) + l];
                        if b.is_zero() {
                            continue;
                        }
                        let idx = (i + k) * (self.ny + 1) + (j + l);
                        out.coeffs[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Multiplicative inverse; the constant term must be invertible.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        let c0 = self.get(0, 0);
        if c0.is_zero() {
            return Err(SeriesError::NonInvertibleDivisor);
        }
        // peel the unit: self = c0 (1 - t) with val(t) >= 1
        let inv_c0 = BigRational::one() / c0;
        let t = Self::one(self.nx, self.ny).sub(&self.scale(&inv_c0));
        let mut acc = Self::one(self.nx, self.ny);
        let mut power = Self::one(self.nx, self.ny);
        for _ in 0..(self.nx + self.ny) {
            power = power.mul(&t);
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power);
        }
        Ok(acc.scale(&inv_c0))
    }

    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Square root with constant term 1, by coefficient recursion along
    /// total degree.
    pub fn sqrt(&self) -> Result<Self, SeriesError> {
        if self.get(0, 0) != BigRational::one() {
            return Err(SeriesError::SqrtConstantTerm);
        }
        let mut s = Self::zero(self.nx, self.ny);
        s.set(0, 0, BigRational::one());
        let two = BigRational::from_integer(BigInt::from(2));
        for d in 1..=(self.nx + self.ny) {
            for i in 0..=self.nx.min(d) {
                let j = d - i;
                if j > self.ny {
                    continue;
                }
                // a_{ij} = sum over splittings of s_{pq} s_{i-p, j-q}
                let mut acc = BigRational::zero();
                for p in 0..=i {
                    for q in 0..=j {
                        if (p, q) == (0, 0) || (p, q) == (i, j) {
                            continue;
                        }
                        acc += s.get(p, q) * s.get(i - p, j - q);
                    }
                }
                let val = (self.get(i, j) - acc) / &two;
                s.set(i, j, val);
            }
        }
        Ok(s)
    }

    /// Exact division by x^k; fails when lower coefficients are nonzero.
    /// The truncation bound drops by k, reflecting what is actually known.
    pub fn div_x_pow(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(k <= self.nx, "x bound too small for the shift");
        for i in 0..k {
            for j in 0..=self.ny {
                if !self.get(i, j).is_zero() {
                    return Err(SeriesError::NotDivisible("x"));
                }
            }
        }
        let mut out = Self::zero(self.nx - k, self.ny);
        for i in k..=self.nx {
            for j in 0..=self.ny {
                out.set(i - k, j, self.get(i, j));
            }
        }
        Ok(out)
    }

    /// Exact division by y^k, shrinking the y bound by k.
    pub fn div_y_pow(&self, k: usize) -> Result<Self, SeriesError> {
        assert!(k <= self.ny, "y bound too small for the shift");
        for j in 0..k {
            for i in 0..=self.nx {
                if !self.get(i, j).is_zero() {
                    return Err(SeriesError::NotDivisible("y"));
                }
            }
        }
        let mut out = Self::zero(self.nx, self.ny - k);
        for j in k..=self.ny {
            for i in 0..=self.nx {
                out.set(i, j - k, self.get(i, j));
            }
        }
        Ok(out)
    }

    /// Restriction to smaller truncation bounds.
    pub fn truncate(&self, nx: usize, ny: usize) -> Self {
        assert!(nx <= self.nx && ny <= self.ny, "truncate only shrinks");
        let mut out = Self::zero(nx, ny);
        for i in 0..=nx {
            for j in 0..=ny {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }

    /// Substitutes series for both variables. Both images must have positive
    /// valuation (or be the respective variable itself).
    pub fn subst_xy(&self, x_image: &Self, y_image: &Self) -> Result<Self, SeriesError> {
        for img in [x_image, y_image] {
            if !img.get(0, 0).is_zero() {
                return Err(SeriesError::BadSubstitution);
            }
        }
        let (nx, ny) = (x_image.nx, x_image.ny);
        x_image.assert_same_bounds(y_image);
        // powers of the y image, reused across x powers
        let mut y_pows: Vec<BiSeries> = Vec::with_capacity(self.ny + 1);
        y_pows.push(Self::one(nx, ny));
        for _ in 1..=self.ny {
            let next = y_pows.last().unwrap().mul(y_image);
            y_pows.push(next);
        }
        let mut out = Self::zero(nx, ny);
        let mut x_pow = Self::one(nx, ny);
        for i in 0..=self.nx {
            if i > 0 {
                x_pow = x_pow.mul(x_image);
                if x_pow.is_zero() {
                    break;
                }
            }
            let mut slice = Self::zero(nx, ny);
            let mut any = false;
            for j in 0..=self.ny {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                any = true;
                slice = slice.add(&y_pows[j].scale(&c));
            }
            if any {
                out = out.add(&x_pow.mul(&slice));
            }
        }
        Ok(out)
    }

    /// Substitutes a series for y, leaving x untouched.
    pub fn subst_y(&self, y_image: &Self) -> Result<Self, SeriesError> {
        let x = Self::var_x(y_image.nx, y_image.ny);
        self.subst_xy(&x, y_image)
    }

    /// Coefficients of x^0..=x^n with the y-degree fixed to `j`.
    pub fn x_row(&self, j: usize) -> Vec<BigRational> {
        (0..=self.nx).map(|i| self.get(i, j)).collect()
    }

    /// Integer x-coefficients at y-degree 0; panics when a coefficient is
    /// fractional or negative (internal consistency, must never fire).
    pub fn x_row_counts(&self) -> Vec<BigUint> {
        self.x_row(0)
            .iter()
            .map(rational_to_count)
            .collect()
    }

    /// Sparse term list ordered by (x-degree, y-degree).
    pub fn terms(&self) -> Vec<(usize, usize, BigRational)> {
        let mut out = Vec::new();
        for i in 0..=self.nx {
            for j in 0..=self.ny {
                let c = self.get(i, j);
                if !c.is_zero() {
                    out.push((i, j, c));
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for BiSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BiSeries[{}x{}]{{", self.nx, self.ny)?;
        for (i, j, c) in self.terms().into_iter().take(12) {
            write!(f, " {c}*x^{i}y^{j}")?;
        }
        write!(f, " ...}}")
    }
}

impl std::fmt::Display for BiSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = terms
            .iter()
            .map(|(i, j, c)| {
                let mut part = c.to_string();
                if *i > 0 {
                    part.push_str(&format!("*x^{i}"));
                }
                if *j > 0 {
                    part.push_str(&format!("*y^{j}"));
                }
                part
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

/// Converts an exact rational that must be a nonnegative integer.
pub fn rational_to_count(c: &BigRational) -> BigUint {
    assert!(
        c.is_integer(),
        "coefficient {c} is not an integer (internal consistency error)"
    );
    assert!(
        !c.is_negative(),
        "coefficient {c} is negative (internal consistency error)"
    );
    c.to_integer().to_biguint().unwrap()
}

/// Solves F = 1 + xF + xyF^2 / (1 - y(F - 1)) by fixed-point iteration;
/// every right-hand occurrence of F carries a factor x, so nx + 1 rounds
/// reach the truncation order.
pub fn solve_f(nx: usize, ny: usize) -> BiSeries {
    let one = BiSeries::one(nx, ny);
    let x = BiSeries::var_x(nx, ny);
    let y = BiSeries::var_y(nx, ny);
    let mut f = one.clone();
    for _ in 0..=nx {
        let denom = one.sub(&y.mul(&f.sub(&one)));
        let next = one
            .add(&x.mul(&f))
            .add(&x.mul(&y).mul(&f).mul(&f).div(&denom).expect("unit denom"));
        if next == f {
            break;
        }
        f = next;
    }
    debug_assert!(f_residual_is_zero(&f));
    f
}

fn f_residual_is_zero(f: &BiSeries) -> bool {
    let (nx, ny) = f.bounds();
    let one = BiSeries::one(nx, ny);
    let x = BiSeries::var_x(nx, ny);
    let y = BiSeries::var_y(nx, ny);
    let denom = one.sub(&y.mul(&f.sub(&one)));
    let rhs = one
        .add(&x.mul(f))
        .add(&x.mul(&y).mul(f).mul(f).div(&denom).unwrap());
    rhs.sub(f).is_zero()
}

/// Closed-form count of independent sets of size k in the staircase core of
/// size n: (1/n) * sum_j C(n, k-j) C(n, j+1) C(n-1+j, n-1).
pub fn closed_form_i(n: usize, k: usize) -> BigUint {
    assert!(n >= 1, "closed form needs n >= 1");
    let mut total = BigUint::zero();
    for j in 0..n {
        let a = binomial_signed(n as i64, k as i64 - j as i64);
        if a.is_zero() {
            continue;
        }
        let b = binomial(n as u64, j as u64 + 1);
        let c = binomial((n - 1 + j) as u64, (n - 1) as u64);
        total += a * b * c;
    }
    let n_big = BigUint::from(n);
    let (q, r) = num_integer_div_rem(&total, &n_big);
    assert!(
        r.is_zero(),
        "closed form not divisible by n (internal consistency error)"
    );
    q
}

fn num_integer_div_rem(a: &BigUint, b: &BigUint) -> (BigUint, BigUint) {
    (a / b, a % b)
}

/// The Narayana generating function of Eq-style closed form: track length by
/// y and left-to-right minima by x via F(xy, y/(1-y)).
pub fn narayana_from_f(nx: usize, ny: usize) -> BiSeries {
    let f = solve_f(ny, ny);
    let x = BiSeries::var_x(nx, ny);
    let y = BiSeries::var_y(nx, ny);
    let one = BiSeries::one(nx, ny);
    let xy = x.mul(&y);
    let y_over = y.div(&one.sub(&y)).expect("unit denom");
    f.subst_xy(&xy, &y_over).expect("valuations positive")
}

/// The explicit algebraic expression whose [y^n x^k] is the number of
/// 132-avoiders of length n with k left-to-right minima:
/// (1 + y - xy - sqrt(R)) / (2y) with
/// R = ((xy)^2 - 4xy) y^2 + 2 ((xy)^2 - 3xy) y (1-y) + (xy-1)^2 (1-y)^2,
/// which collapses to (1 + y - xy)^2 - 4y.
pub fn narayana_closed_series(nx: usize, ny: usize) -> BiSeries {
    // computed with one extra y order so the division by 2y is exact
    let my = ny + 1;
    let one = BiSeries::one(nx, my);
    let x = BiSeries::var_x(nx, my);
    let y = BiSeries::var_y(nx, my);
    let xy = x.mul(&y);
    let one_minus_y = one.sub(&y);
    let xy2 = xy.mul(&xy);
    let term1 = xy2.sub(&xy.scale(&big(4))).mul(&y).mul(&y);
    let term2 = xy2.sub(&xy.scale(&big(3))).mul(&y).mul(&one_minus_y);
    let xym1 = xy.sub(&one);
    let term3 = xym1.mul(&xym1).mul(&one_minus_y).mul(&one_minus_y);
    let radicand = term1.add(&term2.scale(&big(2))).add(&term3);
    // the radicand telescopes; keep both routes honest
    let compact = {
        let a = one.add(&y).sub(&xy);
        a.mul(&a).sub(&y.scale(&big(4)))
    };
    debug_assert!(radicand.sub(&compact).is_zero());
    let root = radicand.sqrt().expect("constant term 1");
    // (2 - xy) y + (1 - y)(1 - xy) simplifies to 1 + y - xy
    let numerator = one.add(&y).sub(&xy).sub(&root);
    let shifted = numerator.div_y_pow(1).expect("numerator divisible by y");
    shifted.scale(&(BigRational::one() / big_rat(2)))
}

fn big(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn big_rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Series with [x^l y^k] = number of 132-avoiders of length l built from an
/// independent set of size k: F(x -> x, y -> y * x/(1-x)).
pub fn triangle_series(nx: usize, ny: usize) -> BiSeries {
    let f = solve_f(nx, ny);
    let one = BiSeries::one(nx, ny);
    let x = BiSeries::var_x(nx, ny);
    let y = BiSeries::var_y(nx, ny);
    let geom = x.div(&one.sub(&x)).expect("unit denom");
    f.subst_xy(&x, &y.mul(&geom)).expect("valuations positive")
}

/// The smooth family: G (extended staircase down-cores), P_ind
/// (skew-indecomposable 2143-free boundaries) and P (all such boundaries).
pub struct SmoothFamily {
    pub f: BiSeries,
    pub g: BiSeries,
    pub p_ind: BiSeries,
    pub p: BiSeries,
}

pub fn smooth_family(nx: usize, ny: usize) -> SmoothFamily {
    // one extra x order so that (F - 1)/x is exact through x^nx
    let f_wide = solve_f(nx + 1, ny);
    let one_wide = BiSeries::one(nx + 1, ny);
    let g = f_wide
        .sub(&one_wide)
        .div_x_pow(1)
        .expect("F - 1 divisible by x")
        .div(&BiSeries::one(nx, ny).add(&BiSeries::var_y(nx, ny)))
        .expect("unit denom");
    let f = f_wide.truncate(nx, ny);
    let one = BiSeries::one(nx, ny);
    let x = BiSeries::var_x(nx, ny);
    let two = one.scale(&big(2));
    let p_ind = x
        .mul(&f.sub(&one))
        .div(&two.sub(&g))
        .expect("2 - G invertible")
        .add(&x);
    let p = one.sub(&p_ind).inverse().expect("unit denom");
    SmoothFamily { f, g, p_ind, p }
}

/// Expansion of (1 - 5x + 3x^2 + x^2 sqrt(1-4x)) / (1 - 6x + 8x^2 - 4x^3).
pub fn smooth_closed_counts(n: usize) -> Vec<BigUint> {
    let one = BiSeries::one(n, 0);
    let x = BiSeries::var_x(n, 0);
    let x2 = x.mul(&x);
    let x3 = x2.mul(&x);
    let root = one.sub(&x.scale(&big(4))).sqrt().expect("constant 1");
    let numer = one
        .sub(&x.scale(&big(5)))
        .add(&x2.scale(&big(3)))
        .add(&x2.mul(&root));
    let denom = one
        .sub(&x.scale(&big(6)))
        .add(&x2.scale(&big(8)))
        .sub(&x3.scale(&big(4)));
    numer.div(&denom).expect("unit denom").x_row_counts()
}

/// The updown family on staircases and 2143-free boundaries.
pub struct UpdownFamily {
    pub r: BiSeries,
    pub q_up: BiSeries,
    pub q_down: BiSeries,
    pub q_ind: BiSeries,
    pub q: BiSeries,
}

pub fn updown_family(nx: usize, ny: usize) -> UpdownFamily {
    let one = BiSeries::one(nx, ny);
    let x = BiSeries::var_x(nx, ny);
    let y = BiSeries::var_y(nx, ny);
    let geom = one.sub(&x).inverse().expect("unit denom");
    // R = 1 + xR + xyR/(1-x)
    let r = one
        .sub(&x)
        .sub(&x.mul(&y).mul(&geom))
        .inverse()
        .expect("unit denom");
    // Q_up = A + (R-1) Q_down + C (Q_up + Q_down + D)
    let x2 = x.mul(&x);
    let a = x
        .mul(&r)
        .sub(&x)
        .sub(&x2)
        .sub(&x2.mul(&y));
    let b = r.sub(&one);
    let c = x2.mul(&y).mul(&r).mul(&geom);
    let d = x2.add(&x2.mul(&y));
    let (q_up, q_down) = solve_symmetric_pair(&a.add(&c.mul(&d)), &b, &c);
    let q_ind = q_up
        .add(&q_down)
        .add(&x)
        .add(&x2)
        .add(&x2.mul(&y));
    let q = one.sub(&q_ind).inverse().expect("unit denom");
    UpdownFamily {
        r,
        q_up,
        q_down,
        q_ind,
        q,
    }
}

/// Solves the symmetric pair U = rhs + B V + C (U + V) and its mirror two
/// ways (symmetric reduction and 2x2 elimination) and asserts they agree;
/// the determinant is a unit at our truncations.
fn solve_symmetric_pair(rhs: &BiSeries, b: &BiSeries, c: &BiSeries) -> (BiSeries, BiSeries) {
    let (nx, ny) = rhs.bounds();
    let one = BiSeries::one(nx, ny);
    // symmetric route: U = V
    let sym = rhs
        .div(&one.sub(b).sub(&c.scale(&big(2))))
        .expect("unit denominator in symmetric route");
    // elimination route: subtracting the equations gives (U - V)(1 + B) = 0,
    // adding them gives (U + V)(1 - B - 2C) = 2 rhs
    let det = one
        .sub(c)
        .mul(&one.sub(c))
        .sub(&b.add(c).mul(&b.add(c)));
    assert!(
        !det.get(0, 0).is_zero(),
        "singular linear system at truncation (internal error)"
    );
    let u = rhs
        .mul(&one.sub(c).add(&b.add(c)))
        .div(&det)
        .expect("unit determinant");
    assert!(
        u.sub(&sym).is_zero(),
        "elimination and symmetric routes disagree"
    );
    (sym.clone(), sym)
}

/// Expansion of (1 - 3x - 2x^3) / (1 - 4x + 2x^2 - 2x^3 + x^4).
pub fn updown_closed_counts(n: usize) -> Vec<BigUint> {
    let one = BiSeries::one(n, 0);
    let x = BiSeries::var_x(n, 0);
    let x2 = x.mul(&x);
    let x3 = x2.mul(&x);
    let x4 = x3.mul(&x);
    let numer = one.sub(&x.scale(&big(3))).sub(&x3.scale(&big(2)));
    let denom = one
        .sub(&x.scale(&big(4)))
        .add(&x2.scale(&big(2)))
        .sub(&x3.scale(&big(2)))
        .add(&x4);
    numer.div(&denom).expect("unit denom").x_row_counts()
}

/// The four-pattern family over 1432- and 3214-free boundaries.
pub struct FourPatternFamily {
    pub s_up: BiSeries,
    pub s_down: BiSeries,
    pub s_ind: BiSeries,
    pub s: BiSeries,
}

pub fn four_pattern_family(nx: usize, ny: usize) -> FourPatternFamily {
    let one = BiSeries::one(nx, ny);
    let x = BiSeries::var_x(nx, ny);
    let y = BiSeries::var_y(nx, ny);
    let x2 = x.mul(&x);
    let x3 = x2.mul(&x);
    let x4 = x3.mul(&x);
    let y2 = y.mul(&y);
    // S_up = x^3 (1 + 3y + y^2) + x S_down + xy S_down + x^2 y (S_up + (1+y) x^2)
    let head = x3.mul(&one.add(&y.scale(&big(3))).add(&y2));
    let rhs = head.add(&x4.mul(&y).mul(&one.add(&y)));
    // rewrite as U = rhs + B V + C (U + V) with B = x + xy - C, C = x^2 y / ...
    // simpler: U = rhs + (x + xy) V + x^2 y U; solve directly both ways
    let b = x.add(&x.mul(&y));
    let c = x2.mul(&y);
    // symmetric route
    let sym = rhs
        .div(&one.sub(&b).sub(&c))
        .expect("unit denominator in symmetric route");
    // elimination route: U - V = (B)(V - U) + ... gives (U-V)(1 + B - C) = 0
    let det = one.sub(&c).mul(&one.sub(&c)).sub(&b.mul(&b));
    assert!(
        !det.get(0, 0).is_zero(),
        "singular linear system at truncation (internal error)"
    );
    let u = rhs
        .mul(&one.sub(&c).add(&b))
        .div(&det)
        .expect("unit determinant");
    assert!(
        u.sub(&sym).is_zero(),
        "elimination and symmetric routes disagree"
    );
    let s_up = sym.clone();
    let s_down = sym;
    let s_ind = s_up
        .add(&s_down)
        .add(&x)
        .add(&x2.mul(&one.add(&y)))
        .add(&x4.mul(&one.add(&y.scale(&big(7))).add(&y2.scale(&big(7)))));
    let s = one.sub(&s_ind).inverse().expect("unit denom");
    FourPatternFamily {
        s_up,
        s_down,
        s_ind,
        s,
    }
}

/// Expansion of (1 - x - x^2 - x^3) /
/// (1 - 2x - x^2 - 2x^3 - 4x^4 - 8x^5 + 15x^7 + 14x^8 + 7x^9).
pub fn four_pattern_closed_counts(n: usize) -> Vec<BigUint> {
    let one = BiSeries::one(n, 0);
    let x = BiSeries::var_x(n, 0);
    let pow = |k: usize| -> BiSeries {
        let mut p = one.clone();
        for _ in 0..k {
            p = p.mul(&x);
        }
        p
    };
    let numer = one.sub(&pow(1)).sub(&pow(2)).sub(&pow(3));
    let denom = one
        .sub(&pow(1).scale(&big(2)))
        .sub(&pow(2))
        .sub(&pow(3).scale(&big(2)))
        .sub(&pow(4).scale(&big(4)))
        .sub(&pow(5).scale(&big(8)))
        .add(&pow(7).scale(&big(15)))
        .add(&pow(8).scale(&big(14)))
        .add(&pow(9).scale(&big(7)));
    numer.div(&denom).expect("unit denom").x_row_counts()
}

/// The non-intersecting boundary family.
pub struct NonintersectingFamily {
    pub g: BiSeries,
    pub h: BiSeries,
    pub i: BiSeries,
    pub j: BiSeries,
}

pub fn nonintersecting_family(nx: usize, ny: usize) -> NonintersectingFamily {
    let SmoothFamily { g, .. } = smooth_family(nx, ny);
    let one = BiSeries::one(nx, ny);
    let y = BiSeries::var_y(nx, ny);
    let g_minus_1 = g.sub(&one);
    let denom = one.sub(&y.mul(&g_minus_1));
    let h = g.div(&denom).expect("unit denom");
    let i = h.add(
        &y.mul(&g)
            .mul(&h.sub(&one))
            .div(&denom)
            .expect("unit denom"),
    );
    // third row selected: J = (1+y) I - y + y (1+y)^2 I (G-1) / (1 - y(G-1))
    let one_plus_y = one.add(&y);
    let j = one_plus_y
        .mul(&i)
        .sub(&y)
        .add(
            &y.mul(&one_plus_y)
                .mul(&one_plus_y)
                .mul(&i)
                .mul(&g_minus_1)
                .div(&denom)
                .expect("unit denom"),
        );
    NonintersectingFamily { g, h, i, j }
}

/// Length counts of 1324-avoiders with a non-intersecting boundary with b
/// right-to-left maxima: the x-expansion of x^b * {F, H, J}(x, x/(1-x)).
/// The b = 1 case reduces to counting by a single staircase core.
pub fn type_b_counter(b: usize, n: usize) -> Vec<BigUint> {
    assert!((1..=3).contains(&b), "only b = 1, 2, 3 are supported");
    let base = match b {
        1 => solve_f(n, n),
        2 => nonintersecting_family(n, n).h,
        _ => nonintersecting_family(n, n).j,
    };
    let one = BiSeries::one(n, n);
    let x = BiSeries::var_x(n, n);
    let geom = x.div(&one.sub(&x)).expect("unit denom");
    let sub = base.subst_y(&geom).expect("positive valuation");
    let mut counts = vec![BigUint::zero(); n + 1];
    for (i, c) in sub.x_row(0).iter().enumerate() {
        if i + b <= n {
            counts[i + b] = rational_to_count(c);
        }
    }
    counts
}

/// Length counts of the smooth class: the x-expansion of P(x, x/(1-x)).
pub fn smooth_counts(n: usize) -> Vec<BigUint> {
    let fam = smooth_family(n, n);
    let one = BiSeries::one(n, n);
    let x = BiSeries::var_x(n, n);
    let geom = x.div(&one.sub(&x)).expect("unit denom");
    fam.p
        .subst_y(&geom)
        .expect("positive valuation")
        .x_row_counts()
}

/// Length counts of the updown class: the x-expansion of Q(x, x).
pub fn updown_counts(n: usize) -> Vec<BigUint> {
    let fam = updown_family(n, n);
    let x = BiSeries::var_x(n, n);
    fam.q.subst_y(&x).expect("positive valuation").x_row_counts()
}

/// Length counts of the four-pattern class: the x-expansion of S(x, x).
pub fn four_pattern_counts(n: usize) -> Vec<BigUint> {
    let fam = four_pattern_family(n, n);
    let x = BiSeries::var_x(n, n);
    fam.s.subst_y(&x).expect("positive valuation").x_row_counts()
}
