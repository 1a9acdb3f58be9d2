//! Fixed-size complex matrices (2×2, 4×4 and the rectangular 4×2 / 2×4
//! shapes used for amplitudes) and the handful of closed-form routines the
//! rest of the crate relies on.
//!
//! Residuals are measured with the max-abs-entry norm throughout.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

pub use num_complex::Complex64 as Complex;

pub const ZERO: Complex = Complex::new(0.0, 0.0);
pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const I: Complex = Complex::new(0.0, 1.0);

/// Plain real 3-vector.
pub type Real3 = [f64; 3];

pub fn dot3(a: &Real3, b: &Real3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross3(a: &Real3, b: &Real3) -> Real3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm3(a: &Real3) -> f64 {
    dot3(a, a).sqrt()
}

pub fn scale3(a: &Real3, s: f64) -> Real3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

/// Unit vector along `a`, or `None` for a zero / non-finite input.
pub fn normalize3(a: &Real3) -> Option<Real3> {
    let n = norm3(a);
    if n > 0.0 && n.is_finite() {
        Some(scale3(a, 1.0 / n))
    } else {
        None
    }
}

/// Row-major `R × C` complex matrix.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix<const R: usize, const C: usize> {
    entries: [[Complex; C]; R],
}

pub type Mat2 = Matrix<2, 2>;
pub type Mat4 = Matrix<4, 4>;
/// Bispinor index × spin index, the shape of an amplitude `v^ε(p)`.
pub type Mat4x2 = Matrix<4, 2>;
pub type Mat2x4 = Matrix<2, 4>;

impl<const R: usize, const C: usize> Matrix<R, C> {
    pub const fn from_rows(entries: [[Complex; C]; R]) -> Self {
        Self { entries }
    }

    pub const fn zeros() -> Self {
        Self {
            entries: [[ZERO; C]; R],
        }
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut out = Self::zeros();
        for r in 0..R {
            for c in 0..C {
                out.entries[r][c] = f(r, c);
            }
        }
        out
    }

    pub fn rows(&self) -> &[[Complex; C]; R] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(Complex) -> Complex) -> Self {
        Self::from_fn(|r, c| f(self.entries[r][c]))
    }

    pub fn scale(&self, s: Complex) -> Self {
        self.map(|z| z * s)
    }

    pub fn scale_re(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    pub fn transpose(&self) -> Matrix<C, R> {
        Matrix::from_fn(|r, c| self.entries[c][r])
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Matrix<C, R> {
        Matrix::from_fn(|r, c| self.entries[c][r].conj())
    }

    pub fn max_abs_norm(&self) -> f64 {
        self.entries.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().flatten().all(|z| z.is_finite())
    }
}

impl<const N: usize> Matrix<N, N> {
    pub fn identity() -> Self {
        Self::from_fn(|r, c| if r == c { ONE } else { ZERO })
    }

    pub fn diag(d: [Complex; N]) -> Self {
        Self::from_fn(|r, c| if r == c { d[r] } else { ZERO })
    }

    pub fn trace(&self) -> Complex {
        (0..N).map(|i| self.entries[i][i]).sum()
    }

    /// Max-abs deviation from Hermiticity, `‖M − M†‖`.
    pub fn hermiticity_residual(&self) -> f64 {
        dist(self, &self.dagger())
    }
}

impl Mat2 {
    pub fn det(&self) -> Complex {
        let e = &self.entries;
        e[0][0] * e[1][1] - e[0][1] * e[1][0]
    }
}

impl Mat4 {
    /// Assemble a 4×4 matrix from 2×2 blocks `[[a, b], [c, d]]`.
    pub fn from_blocks(a: &Mat2, b: &Mat2, c: &Mat2, d: &Mat2) -> Self {
        Self::from_fn(|r, col| {
            let blk = match (r / 2, col / 2) {
                (0, 0) => a,
                (0, 1) => b,
                (1, 0) => c,
                _ => d,
            };
            blk.entries[r % 2][col % 2]
        })
    }

    /// The 2×2 block at block position `(br, bc)`.
    pub fn block(&self, br: usize, bc: usize) -> Mat2 {
        Mat2::from_fn(|r, c| self.entries[2 * br + r][2 * bc + c])
    }
}

impl Mat4x2 {
    /// Stack two 2×2 matrices vertically.
    pub fn stack(top: &Mat2, bottom: &Mat2) -> Self {
        Self::from_fn(|r, c| {
            if r < 2 {
                top.entries[r][c]
            } else {
                bottom.entries[r - 2][c]
            }
        })
    }
}

impl<const R: usize, const C: usize> Index<(usize, usize)> for Matrix<R, C> {
    type Output = Complex;
    fn index(&self, (r, c): (usize, usize)) -> &Complex {
        &self.entries[r][c]
    }
}

impl<const R: usize, const C: usize> IndexMut<(usize, usize)> for Matrix<R, C> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Complex {
        &mut self.entries[r][c]
    }
}

impl<const R: usize, const C: usize> Add for Matrix<R, C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.entries[r][c] + rhs.entries[r][c])
    }
}

impl<const R: usize, const C: usize> AddAssign for Matrix<R, C> {
    fn add_assign(&mut self, rhs: Self) {
        for r in 0..R {
            for c in 0..C {
                self.entries[r][c] += rhs.entries[r][c];
            }
        }
    }
}

impl<const R: usize, const C: usize> Sub for Matrix<R, C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.entries[r][c] - rhs.entries[r][c])
    }
}

impl<const R: usize, const C: usize> Neg for Matrix<R, C> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl<const R: usize, const K: usize, const C: usize> Mul<Matrix<K, C>> for Matrix<R, K> {
    type Output = Matrix<R, C>;
    fn mul(self, rhs: Matrix<K, C>) -> Matrix<R, C> {
        Matrix::from_fn(|r, c| {
            let mut acc = ZERO;
            for k in 0..K {
                acc += self.entries[r][k] * rhs.entries[k][c];
            }
            acc
        })
    }
}

impl<const R: usize, const C: usize> Mul<f64> for Matrix<R, C> {
    type Output = Self;
    fn mul(self, rhs: f64) -> Self {
        self.scale_re(rhs)
    }
}

impl<const R: usize, const C: usize> Mul<Complex> for Matrix<R, C> {
    type Output = Self;
    fn mul(self, rhs: Complex) -> Self {
        self.scale(rhs)
    }
}

impl<const R: usize, const C: usize> Mul<Matrix<R, C>> for f64 {
    type Output = Matrix<R, C>;
    fn mul(self, rhs: Matrix<R, C>) -> Matrix<R, C> {
        rhs.scale_re(self)
    }
}

impl<const R: usize, const C: usize> Mul<Matrix<R, C>> for Complex {
    type Output = Matrix<R, C>;
    fn mul(self, rhs: Matrix<R, C>) -> Matrix<R, C> {
        rhs.scale(self)
    }
}

impl<const R: usize, const C: usize> fmt::Debug for Matrix<R, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in &self.entries {
            write!(f, " ")?;
            for z in row {
                write!(f, " {:+.6}{:+.6}i", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// `AB − BA`.
pub fn commutator<const N: usize>(a: &Matrix<N, N>, b: &Matrix<N, N>) -> Matrix<N, N> {
    *a * *b - *b * *a
}

/// `AB + BA`.
pub fn anticommutator<const N: usize>(a: &Matrix<N, N>, b: &Matrix<N, N>) -> Matrix<N, N> {
    *a * *b + *b * *a
}

pub fn max_abs_norm<const R: usize, const C: usize>(m: &Matrix<R, C>) -> f64 {
    m.max_abs_norm()
}

/// `max_abs_norm(A − B)`.
pub fn dist<const R: usize, const C: usize>(a: &Matrix<R, C>, b: &Matrix<R, C>) -> f64 {
    let mut worst: f64 = 0.0;
    for r in 0..R {
        for c in 0..C {
            worst = worst.max((a.entries[r][c] - b.entries[r][c]).norm());
        }
    }
    worst
}

/// Roots of `λ² − tr(M)λ + det(M)`, ordered by descending real part, ties by
/// descending imaginary part.
pub fn eig2(m: &Mat2) -> (Complex, Complex) {
    let half_tr = m.trace() * 0.5;
    let disc = (half_tr * half_tr - m.det()).sqrt();
    let (a, b) = (half_tr + disc, half_tr - disc);
    let a_first = a.re > b.re || (a.re == b.re && a.im >= b.im);
    if a_first {
        (a, b)
    } else {
        (b, a)
    }
}

/// Components of a 3-vector operator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec3Of<M> {
    pub x: M,
    pub y: M,
    pub z: M,
}

impl<M> Vec3Of<M> {
    pub fn new(x: M, y: M, z: M) -> Self {
        Self { x, y, z }
    }

    pub fn from_fn(mut f: impl FnMut(usize) -> M) -> Self {
        Self {
            x: f(0),
            y: f(1),
            z: f(2),
        }
    }

    pub fn map<N>(&self, mut f: impl FnMut(&M) -> N) -> Vec3Of<N> {
        Vec3Of {
            x: f(&self.x),
            y: f(&self.y),
            z: f(&self.z),
        }
    }

    pub fn zip_map<N, O>(&self, other: &Vec3Of<N>, mut f: impl FnMut(&M, &N) -> O) -> Vec3Of<O> {
        Vec3Of {
            x: f(&self.x, &other.x),
            y: f(&self.y, &other.y),
            z: f(&self.z, &other.z),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &M> {
        [&self.x, &self.y, &self.z].into_iter()
    }
}

impl<M> Index<usize> for Vec3Of<M> {
    type Output = M;
    fn index(&self, i: usize) -> &M {
        match i {
            0 => &self.x,
            1 => &self.y,
            2 => &self.z,
            _ => panic!("Vec3Of index {i} out of range"),
        }
    }
}

impl<const N: usize> Vec3Of<Matrix<N, N>> {
    /// `â·V` for a real direction `â`.
    pub fn project(&self, a: &Real3) -> Matrix<N, N> {
        self.x * a[0] + self.y * a[1] + self.z * a[2]
    }

    pub fn max_abs_norm(&self) -> f64 {
        self.iter().map(|m| m.max_abs_norm()).fold(0.0, f64::max)
    }
}

/// Component-wise max-abs distance between two vector operators.
pub fn dist_vec<const R: usize, const C: usize>(a: &Vec3Of<Matrix<R, C>>, b: &Vec3Of<Matrix<R, C>>) -> f64 {
    dist(&a.x, &b.x).max(dist(&a.y, &b.y)).max(dist(&a.z, &b.z))
}
