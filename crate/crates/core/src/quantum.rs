//! Conventional tensor-product Deutsch-Jozsa, used as an independent
//! cross-check of the geometric-product pipeline.
//!
//! Basis labels are big-endian `A_1…A_q` with `A_1` most significant, the
//! same convention as the blade bitmasks, so no index translation is needed
//! when comparing backends.

use num_complex::Complex;

use crate::boolean::BooleanFunction;
use crate::error::GaError;
use crate::scalar::Scalar;

pub const MAX_QUBITS: u32 = 24;

/// Amplitudes of a `q`-qubit register.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector<T: Scalar> {
    q: u32,
    amps: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    /// The computational basis state `|label>`.
    pub fn basis(q: u32, label: u64) -> Result<Self, GaError> {
        if q == 0 || q > MAX_QUBITS {
            return Err(GaError::QubitCount { q, max: MAX_QUBITS });
        }
        let mut amps = vec![Complex::new(T::zero(), T::zero()); 1usize << q];
        amps[label as usize] = Complex::new(T::one(), T::zero());
        Ok(StateVector { q, amps })
    }

    pub fn qubits(&self) -> u32 {
        self.q
    }

    pub fn amplitude(&self, label: u64) -> Complex<T> {
        self.amps[label as usize]
    }

    pub fn norm_squared(&self) -> T {
        self.amps
            .iter()
            .fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    /// Hadamard on every qubit: `q` in-place single-qubit butterflies,
    /// `amps'[B] = 2^{-q/2} Σ_A (-1)^{A·B} amps[A]`.
    pub fn hadamard_all(&self) -> Self {
        let mut amps = self.amps.clone();
        let inv_sqrt2 = T::one() / T::from_int(2).sqrt();
        for bit in 0..self.q {
            let stride = 1usize << bit;
            let mut base = 0;
            while base < amps.len() {
                for i in base..base + stride {
                    let a = amps[i];
                    let b = amps[i + stride];
                    amps[i] = (a + b).scale(inv_sqrt2);
                    amps[i + stride] = (a - b).scale(inv_sqrt2);
                }
                base += 2 * stride;
            }
        }
        StateVector { q: self.q, amps }
    }

    /// The oracle `U_f |x>|y> = |x>|y XOR f(x)>`: a permutation swapping the
    /// two ancilla amplitudes wherever `f(x) = 1`.
    pub fn apply_uf(&self, f: &BooleanFunction) -> Result<Self, GaError> {
        if self.q != f.n() + 1 {
            return Err(GaError::DimensionMismatch {
                left: self.q,
                right: f.n() + 1,
            });
        }
        let mut amps = self.amps.clone();
        for x in 0..1u64 << f.n() {
            if f.eval(x) == 1 {
                let i = (x << 1) as usize;
                amps.swap(i, i | 1);
            }
        }
        Ok(StateVector { q: self.q, amps })
    }
}

/// The original algorithm: `H^{⊗q} U_f H^{⊗q}` on `|0…01>`, returning the
/// real amplitude at `|0…01>`. Equals `2^{-n} Σ_x (-1)^{f(x)}`: exactly
/// `(-1)^{f(0)}` for constant `f`, `0` for balanced `f`.
pub fn dj_reference<T: Scalar>(f: &BooleanFunction) -> Result<T, GaError> {
    let q = f.n() + 1;
    let s = StateVector::<T>::basis(q, 1)?
        .hadamard_all()
        .apply_uf(f)?
        .hadamard_all();
    let amp = s.amplitude(1);
    debug_assert!(amp.im.abs() < T::from_f64(1e-12).unwrap());
    Ok(amp.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_qubit_hadamard() {
        let s = StateVector::<f64>::basis(1, 0).unwrap().hadamard_all();
        let v = 1.0 / 2f64.sqrt();
        assert!((s.amplitude(0).re - v).abs() < 1e-12);
        assert!((s.amplitude(1).re - v).abs() < 1e-12);
    }

    #[test]
    fn hadamard_of_seed_alternates_ancilla_sign() {
        // |0…01> goes to 2^{-q/2} Σ_A (-1)^{A_q} |A>
        let q = 3;
        let s = StateVector::<f64>::basis(q, 1).unwrap().hadamard_all();
        let norm = 1.0 / (1u64 << q) as f64 * 1.0; // |amp|^2 each
        for label in 0..1u64 << q {
            let want = if label & 1 == 0 { 1.0 } else { -1.0 };
            let a = s.amplitude(label);
            assert!((a.re * a.re - norm).abs() < 1e-12);
            assert!((a.re.signum() - want).abs() < 1e-12);
            assert!(a.im.abs() < 1e-12);
        }
    }

    #[test]
    fn hadamard_is_involutive_and_unitary() {
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..50 {
            let q = rng.gen_range(1..=8u32);
            let label = rng.gen_range(0..1u64 << q);
            let s = StateVector::<f64>::basis(q, label).unwrap();
            let h = s.hadamard_all();
            assert!((h.norm_squared() - 1.0).abs() < 1e-12);
            let hh = h.hadamard_all();
            for l in 0..1u64 << q {
                assert!((hh.amplitude(l) - s.amplitude(l)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn oracle_is_permutation_and_involution() {
        let f = BooleanFunction::from_table(2, vec![1, 0, 1, 1]).unwrap();
        let s = StateVector::<f64>::basis(3, 5).unwrap().hadamard_all();
        let once = s.apply_uf(&f).unwrap();
        assert!((once.norm_squared() - 1.0).abs() < 1e-12);
        let twice = once.apply_uf(&f).unwrap();
        for l in 0..8 {
            assert!((twice.amplitude(l) - s.amplitude(l)).norm() < 1e-12);
        }

        let f0 = BooleanFunction::constant(2, 0).unwrap();
        assert_eq!(s.apply_uf(&f0).unwrap(), s);
    }

    #[test]
    fn oracle_phase_kickback() {
        // on |x>(|0>-|1>)/sqrt(2) the oracle contributes (-1)^{f(x)}
        let f = BooleanFunction::from_table(1, vec![0, 1]).unwrap();
        for x in 0..2u64 {
            let v = 1.0 / 2f64.sqrt();
            let mut s = StateVector::<f64>::basis(2, x << 1).unwrap();
            s.amps[(x << 1) as usize] = num_complex::Complex::new(v, 0.0);
            s.amps[(x << 1 | 1) as usize] = num_complex::Complex::new(-v, 0.0);
            let out = s.apply_uf(&f).unwrap();
            let sign = if f.eval(x) == 1 { -1.0 } else { 1.0 };
            assert!((out.amplitude(x << 1).re - sign * v).abs() < 1e-12);
            assert!((out.amplitude(x << 1 | 1).re + sign * v).abs() < 1e-12);
        }
    }

    #[test]
    fn reference_golden_values() {
        for n in 1..=4u32 {
            let r = dj_reference::<f64>(&BooleanFunction::constant(n, 0).unwrap()).unwrap();
            assert!((r - 1.0).abs() < 1e-12);
        }
        let r = dj_reference::<f64>(&BooleanFunction::constant(2, 1).unwrap()).unwrap();
        assert!((r + 1.0).abs() < 1e-12);
        let r = dj_reference::<f64>(&BooleanFunction::parity(2).unwrap()).unwrap();
        assert!(r.abs() < 1e-12);
    }

    #[test]
    fn reference_matches_closed_form_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(47);
        for _ in 0..100 {
            let n = rng.gen_range(1..=8u32);
            let f = BooleanFunction::from_table(
                n,
                (0..1u64 << n).map(|_| rng.gen_range(0..=1u8)).collect(),
            )
            .unwrap();
            let want = f.signed_sum() as f64 / (1u64 << n) as f64;
            let got = dj_reference::<f64>(&f).unwrap();
            assert!((got - want).abs() < 1e-9);
        }
    }

    #[test]
    fn qubit_cap() {
        assert!(StateVector::<f64>::basis(0, 0).is_err());
        assert!(StateVector::<f64>::basis(25, 0).is_err());
    }
}
