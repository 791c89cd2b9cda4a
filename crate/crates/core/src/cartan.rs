//! Complex-matrix backend: blades and multivectors mapped to matrices
//! built from Pauli factors.
//!
//! Two explicit low-dimensional tables (`PauliPlane` for two generators,
//! `PauliSpace` for three, both 2x2) reproduce the classic constructions,
//! while `CartanGeneral` realizes any `m <= 12` generators as Kronecker
//! products of Pauli matrices in dimension `2^ceil(m/2)`. The backend
//! exists for verification, not scale: matrices are dense.

use std::fmt;

use num_complex::Complex;

use crate::blade::Blade;
use crate::error::GaError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Generator-count cap for `CartanGeneral` (dimension at most 64).
pub const MAX_CARTAN_GENERATORS: u32 = 12;

/// Which matrix realization of the generators to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepKind {
    /// Kronecker-product construction, dimension `2^ceil(m/2)`, any `m <= 12`.
    CartanGeneral,
    /// 2x2 table for `m = 2`: `e_1 = s1`, `e_2 = s2`.
    PauliPlane,
    /// 2x2 table for `m = 3`: `e_1 = s1`, `e_2 = s2`, `e_3 = s3`.
    PauliSpace,
}

impl RepKind {
    pub fn validate(self, m: u32) -> Result<(), GaError> {
        let ok = match self {
            RepKind::CartanGeneral => (1..=MAX_CARTAN_GENERATORS).contains(&m),
            RepKind::PauliPlane => m == 2,
            RepKind::PauliSpace => m == 3,
        };
        if ok {
            Ok(())
        } else {
            Err(GaError::InvalidRepresentation { kind: self, m })
        }
    }

    /// Representation dimension `N = Tr 1` for `m` generators.
    pub fn dimension(self, m: u32) -> u32 {
        match self {
            RepKind::CartanGeneral => 1 << m.div_ceil(2),
            RepKind::PauliPlane | RepKind::PauliSpace => 2,
        }
    }

    /// The representation used for reporting: the explicit 2x2 tables when
    /// they exist, the general construction otherwise.
    pub fn default_for(m: u32) -> RepKind {
        match m {
            2 => RepKind::PauliPlane,
            3 => RepKind::PauliSpace,
            _ => RepKind::CartanGeneral,
        }
    }
}

/// Dense square complex matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix<T: Scalar> {
    dim: usize,
    entries: Vec<Complex<T>>,
}

impl<T: Scalar> ComplexMatrix<T> {
    pub fn zeros(dim: usize) -> Self {
        ComplexMatrix {
            dim,
            entries: vec![Complex::new(T::zero(), T::zero()); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = ComplexMatrix::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex::new(T::one(), T::zero());
        }
        m
    }

    /// Build from rows of `(re, im)` pairs (test fixtures).
    pub fn from_rows(rows: &[&[(T, T)]]) -> Self {
        let dim = rows.len();
        let mut m = ComplexMatrix::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim);
            for (j, &(re, im)) in row.iter().enumerate() {
                m[(i, j)] = Complex::new(re, im);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == Complex::new(T::zero(), T::zero()) {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (o, e) in out.entries.iter_mut().zip(&other.entries) {
            *o = *o + *e;
        }
        out
    }

    pub fn scale(&self, c: T) -> Self {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = Complex::new(e.re * c, e.im * c);
        }
        out
    }

    pub fn kron(&self, other: &Self) -> Self {
        let n = self.dim * other.dim;
        let mut out = ComplexMatrix::zeros(n);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self[(i, j)];
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out[(i * other.dim + k, j * other.dim + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Complex<T> {
        (0..self.dim).fold(Complex::new(T::zero(), T::zero()), |acc, i| {
            acc + self[(i, i)]
        })
    }

    /// Largest entrywise deviation from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        assert_eq!(self.dim, other.dim);
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (*a - *b).norm())
            .fold(T::zero(), T::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: T) -> bool {
        self.dim == other.dim && self.max_abs_diff(other) <= tol
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for ComplexMatrix<T> {
    type Output = Complex<T>;
    fn index(&self, (i, j): (usize, usize)) -> &Complex<T> {
        &self.entries[i * self.dim + j]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for ComplexMatrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex<T> {
        &mut self.entries[i * self.dim + j]
    }
}

fn round_sig<T: Scalar>(x: T, digits: i32) -> T {
    if x == T::zero() {
        return x;
    }
    let mag = x.abs().log10().floor();
    let scale = T::from_i32(10).unwrap().powi(digits - 1 - mag.to_i32().unwrap());
    (x * scale).round() / scale
}

impl<T: Scalar> fmt::Display for ComplexMatrix<T> {
    /// Rows of `a+bi` entries, 6 significant digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, "  ")?;
                }
                let e = self[(i, j)];
                let re = round_sig(e.re, 6);
                let im = round_sig(e.im, 6);
                write!(
                    f,
                    "{}{}{}i",
                    re,
                    if im < T::zero() { "-" } else { "+" },
                    im.abs()
                )?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn pauli<T: Scalar>(which: u32) -> ComplexMatrix<T> {
    let z = T::zero();
    let o = T::one();
    match which {
        1 => ComplexMatrix::from_rows(&[&[(z, z), (o, z)], &[(o, z), (z, z)]]),
        2 => ComplexMatrix::from_rows(&[&[(z, z), (z, -o)], &[(z, o), (z, z)]]),
        3 => ComplexMatrix::from_rows(&[&[(o, z), (z, z)], &[(z, z), (-o, z)]]),
        _ => unreachable!("pauli index"),
    }
}

/// Matrix image of generator `e_j` (1-based) under the chosen realization.
///
/// The general construction splits `j` into an odd/even pair index `k`:
/// `e_{2k}` places a `s2` factor and `e_{2k-1}` a `s3` factor at slot `k`
/// (counted from the right), preceded by `s1` factors and followed by
/// identities.
pub fn generator_matrix<T: Scalar>(
    j: u32,
    m: u32,
    kind: RepKind,
) -> Result<ComplexMatrix<T>, GaError> {
    kind.validate(m)?;
    assert!(j >= 1 && j <= m, "generator index out of range");
    match kind {
        RepKind::PauliPlane | RepKind::PauliSpace => Ok(pauli(j)),
        RepKind::CartanGeneral => {
            let n = m.div_ceil(2);
            let (k, middle) = if j.is_multiple_of(2) {
                (j / 2, pauli::<T>(2))
            } else {
                (j.div_ceil(2), pauli::<T>(3))
            };
            let mut out = ComplexMatrix::identity(1);
            for _ in 0..(n - k) {
                out = out.kron(&pauli(1));
            }
            out = out.kron(&middle);
            for _ in 0..(k - 1) {
                out = out.kron(&ComplexMatrix::identity(2));
            }
            Ok(out)
        }
    }
}

/// Matrix image of a blade: product of its generator matrices in ascending
/// index order (`e_{1248} = e_1 e_2 e_4 e_8`).
pub fn blade_matrix<T: Scalar>(
    blade: Blade,
    kind: RepKind,
) -> Result<ComplexMatrix<T>, GaError> {
    let m = blade.generators();
    kind.validate(m)?;
    let mut out = ComplexMatrix::identity(kind.dimension(m) as usize);
    for j in blade.indices() {
        out = out.mul(&generator_matrix(j, m, kind)?);
    }
    Ok(out)
}

/// Matrix image of a multivector: linear extension of [`blade_matrix`].
pub fn represent<T: Scalar>(
    x: &Multivector<T>,
    kind: RepKind,
) -> Result<ComplexMatrix<T>, GaError> {
    let m = x.generators();
    kind.validate(m)?;
    let mut out = ComplexMatrix::zeros(kind.dimension(m) as usize);
    for (mask, c) in x.terms() {
        let b = Blade::new(mask, m)?;
        out = out.add(&blade_matrix(b, kind)?.scale(c));
    }
    Ok(out)
}

/// The trace readout `Re Tr M`; equals `N * scalar_part` of the pre-image
/// multivector because every non-scalar blade's matrix has purely
/// imaginary or zero trace (checked in tests, not assumed).
pub fn trace_projection<T: Scalar>(mat: &ComplexMatrix<T>) -> T {
    mat.trace().re
}
