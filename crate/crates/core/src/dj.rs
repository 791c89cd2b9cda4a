//! Deutsch-Jozsa by geometric product.
//!
//! The pipeline works in the algebra over `m = n + 1` generators: seed blade
//! `e_{0…010}`, full superposition `E_{n+1}`, blade-wise oracle `E_f`,
//! reversal operator `F_{n+1}`, scalar readout. The oracle is a linear map
//! over terms, never a one-sided multiplication by a fixed element — the
//! right factor it would need depends on each term's own first `n` bits, so
//! materializing it as a multivector gives wrong results (see the
//! order-caveat test).

use crate::blade::Blade;
use crate::boolean::BooleanFunction;
use crate::cartan::RepKind;
use crate::error::GaError;
use crate::multivector::Multivector;
use crate::scalar::Scalar;

/// Input-bit cap keeping the dense `2^{n+1}`-term superposition desk-scale.
pub const MAX_PIPELINE_INPUT_BITS: u32 = 24;

/// How the scalar readout is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PipelineMode {
    /// Matched-mask scalar extraction, `O(2^{n+1})` blade products.
    ScalarOnly,
    /// Full geometric product then scalar part, `O(2^{2n+1})` blade products.
    FullProduct,
}

/// Outcome of a run, classified against the promise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// Constant with `(-1)^{f(0)}` equal to the carried sign.
    Constant(i32),
    Balanced,
    /// `f` violates the promise; the scalar still counts `2^n - 2|f^{-1}(1)|`.
    NeitherPromiseCase,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DjResult<T: Scalar> {
    /// Coefficient of `e_{0…0}` in the pipeline output times `F_{n+1}`.
    pub scalar: T,
    /// `N * scalar` for the reported representation.
    pub trace_value: T,
    /// Representation dimension `N`.
    pub rep_dim: u32,
    pub classification: Classification,
}

fn check_n(n: u32) -> Result<u32, GaError> {
    if n == 0 || n > MAX_PIPELINE_INPUT_BITS {
        return Err(GaError::InputBits {
            n,
            max: MAX_PIPELINE_INPUT_BITS,
        });
    }
    Ok(n + 1)
}

/// `E_{n+1}`: coefficient +1 on every blade of the `(n+1)`-generator algebra.
pub fn build_superposition<T: Scalar>(n: u32) -> Result<Multivector<T>, GaError> {
    let m = check_n(n)?;
    Multivector::from_terms(m, (0..1u64 << m).map(|mask| (mask, T::one())))
}

/// The seed blade `e_{0…010}`: only `A_n` set, `A_{n+1} = 0`.
pub fn seed_blade(n: u32) -> Result<Blade, GaError> {
    let m = check_n(n)?;
    Blade::new(0b10, m)
}

/// `E_f`: XOR `f(A_1…A_n)` into each term's last bit, coefficients carried
/// unchanged, colliding masks summed.
pub fn apply_oracle<T: Scalar>(
    f: &BooleanFunction,
    x: &Multivector<T>,
) -> Result<Multivector<T>, GaError> {
    let m = x.generators();
    if m != f.n() + 1 {
        return Err(GaError::DimensionMismatch {
            left: m,
            right: f.n() + 1,
        });
    }
    let mapped = x
        .terms()
        .map(|(mask, c)| (mask ^ u64::from(f.eval(mask >> 1)), c))
        .collect::<Vec<_>>();
    Multivector::from_terms(m, mapped)
}

/// `F_{n+1} = Σ e_{A_1…A_n 0}^†`: every last-bit-zero blade with its
/// reverse sign as coefficient.
pub fn build_reversal_operator<T: Scalar>(n: u32) -> Result<Multivector<T>, GaError> {
    let m = check_n(n)?;
    Multivector::from_terms(
        m,
        (0..1u64 << n).map(|y| {
            let mask = y << 1;
            let b = Blade::new(mask, m).expect("mask in range");
            (mask, T::from_int(crate::blade::reverse_sign(b) as i64))
        }),
    )
}

/// Full pipeline: `scalar_part(F_{n+1} · E_f(E_{n+1} e_{0…010}))`, then
/// classification. `kind` only fixes the reported `N`; no matrices are
/// built here.
pub fn run<T: Scalar>(f: &BooleanFunction, kind: RepKind) -> Result<DjResult<T>, GaError> {
    run_with_mode(f, kind, PipelineMode::ScalarOnly)
}

pub fn run_with_mode<T: Scalar>(
    f: &BooleanFunction,
    kind: RepKind,
    mode: PipelineMode,
) -> Result<DjResult<T>, GaError> {
    let n = f.n();
    let m = check_n(n)?;
    let superposition = build_superposition::<T>(n)?;
    let seed = Multivector::term(seed_blade(n)?, T::one());
    let spread = superposition.geometric_product(&seed)?;
    let z = apply_oracle(f, &spread)?;
    let reversal = build_reversal_operator::<T>(n)?;
    let scalar = match mode {
        PipelineMode::ScalarOnly => reversal.scalar_of_product(&z)?,
        PipelineMode::FullProduct => reversal.geometric_product(&z)?.scalar_part(),
    };
    // Internal consistency with the closed form Σ_x (-1)^{f(x)}.
    assert_eq!(
        scalar,
        T::from_int(f.signed_sum()),
        "pipeline scalar disagrees with closed form"
    );
    let full = T::from_int(1i64 << n);
    let classification = if scalar == full {
        Classification::Constant(1)
    } else if scalar == -full {
        Classification::Constant(-1)
    } else if scalar == T::zero() {
        Classification::Balanced
    } else {
        Classification::NeitherPromiseCase
    };
    let rep_dim = kind.dimension(m);
    Ok(DjResult {
        scalar,
        trace_value: T::from_u32(rep_dim).unwrap() * scalar,
        rep_dim,
        classification,
    })
}

/// The full pipeline output `F_{n+1} E_f E_{n+1} e_{0…010}` as a
/// multivector, for the matrix backend cross-check.
pub fn pipeline_product<T: Scalar>(f: &BooleanFunction) -> Result<Multivector<T>, GaError> {
    let n = f.n();
    check_n(n)?;
    let seed = Multivector::term(seed_blade(n)?, T::one());
    let spread = build_superposition::<T>(n)?.geometric_product(&seed)?;
    let z = apply_oracle(f, &spread)?;
    build_reversal_operator::<T>(n)?.geometric_product(&z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn mv(m: u32, terms: &[(u64, f64)]) -> Multivector<f64> {
        Multivector::from_terms(m, terms.iter().copied()).unwrap()
    }

    #[test]
    fn superposition_examples() {
        let e2 = build_superposition::<f64>(1).unwrap();
        assert_eq!(
            e2,
            mv(2, &[(0b00, 1.0), (0b10, 1.0), (0b01, 1.0), (0b11, 1.0)])
        );
        let e3 = build_superposition::<f64>(2).unwrap();
        assert_eq!(e3.num_terms(), 8);
        assert!(e3.terms().all(|(_, c)| c == 1.0));
        assert_eq!(build_superposition::<f64>(5).unwrap().num_terms(), 64);
        assert!(build_superposition::<f64>(0).is_err());
    }

    #[test]
    fn seed_blade_examples() {
        let s1 = seed_blade(1).unwrap();
        assert_eq!(s1.to_string(), "e_10");
        let s2 = seed_blade(2).unwrap();
        assert_eq!(s2.to_string(), "e_010");
        assert_eq!(s2.grade(), 1);
    }

    #[test]
    fn oracle_examples() {
        // constant 0 acts as identity
        let f0 = BooleanFunction::constant(2, 0).unwrap();
        let x = mv(3, &[(0b010, 2.0), (0b111, -1.0)]);
        assert_eq!(apply_oracle(&f0, &x).unwrap(), x);

        // n=1, f(0)=0, f(1)=1 on E_2 e_10
        let f = BooleanFunction::from_table(1, vec![0, 1]).unwrap();
        let z = mv(2, &[(0b10, 1.0), (0b00, 1.0), (0b11, -1.0), (0b01, -1.0)]);
        let want = mv(2, &[(0b11, 1.0), (0b00, 1.0), (0b10, -1.0), (0b01, -1.0)]);
        assert_eq!(apply_oracle(&f, &z).unwrap(), want);

        // oracle is an involution
        let twice = apply_oracle(&f, &apply_oracle(&f, &z).unwrap()).unwrap();
        assert_eq!(twice, z);
    }

    #[test]
    fn oracle_linearity() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..200 {
            let n = rng.gen_range(1..=6u32);
            let m = n + 1;
            let f = BooleanFunction::from_table(
                n,
                (0..1u64 << n).map(|_| rng.gen_range(0..=1u8)).collect(),
            )
            .unwrap();
            let rand_mv = |rng: &mut ChaCha8Rng| {
                Multivector::from_terms(
                    m,
                    (0..rng.gen_range(0..10)).map(|_| {
                        (
                            rng.gen_range(0..1u64 << m),
                            rng.gen_range(-3i64..=3) as f64,
                        )
                    }),
                )
                .unwrap()
            };
            let x = rand_mv(&mut rng);
            let y = rand_mv(&mut rng);
            let c = rng.gen_range(-3i64..=3) as f64;
            let lhs = apply_oracle(&f, &x.add(&y).unwrap()).unwrap();
            let rhs = apply_oracle(&f, &x)
                .unwrap()
                .add(&apply_oracle(&f, &y).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(
                apply_oracle(&f, &x.scale(c)).unwrap(),
                apply_oracle(&f, &x).unwrap().scale(c)
            );
        }
    }

    #[test]
    fn reversal_operator_examples() {
        assert_eq!(
            build_reversal_operator::<f64>(1).unwrap(),
            mv(2, &[(0b00, 1.0), (0b10, 1.0)])
        );
        assert_eq!(
            build_reversal_operator::<f64>(2).unwrap(),
            mv(3, &[(0b000, 1.0), (0b100, 1.0), (0b010, 1.0), (0b110, -1.0)])
        );
        assert_eq!(build_reversal_operator::<f64>(4).unwrap().num_terms(), 16);
    }

    #[test]
    fn run_golden_cases() {
        let kind = RepKind::PauliPlane;
        let r = run::<f64>(&BooleanFunction::constant(1, 0).unwrap(), kind).unwrap();
        assert_eq!(r.trace_value, 4.0);
        assert_eq!(r.classification, Classification::Constant(1));

        let r = run::<f64>(&BooleanFunction::constant(1, 1).unwrap(), kind).unwrap();
        assert_eq!(r.trace_value, -4.0);
        assert_eq!(r.classification, Classification::Constant(-1));

        let kind = RepKind::PauliSpace;
        let r = run::<f64>(&BooleanFunction::constant(2, 0).unwrap(), kind).unwrap();
        assert_eq!(r.trace_value, 8.0);
        assert_eq!(r.rep_dim, 2);

        // balanced f(00)=0, f(10)=0, f(01)=1, f(11)=1
        let f = BooleanFunction::from_table(2, vec![0, 1, 0, 1]).unwrap();
        let r = run::<f64>(&f, kind).unwrap();
        assert_eq!(r.trace_value, 0.0);
        assert_eq!(r.classification, Classification::Balanced);

        // majority of 3 bits is balanced
        let maj = BooleanFunction::from_table(
            3,
            (0..8u64)
                .map(|x| u8::from(x.count_ones() >= 2))
                .collect(),
        )
        .unwrap();
        let r = run::<f64>(&maj, RepKind::CartanGeneral).unwrap();
        assert_eq!(r.scalar, 0.0);
        assert_eq!(r.classification, Classification::Balanced);
    }

    #[test]
    fn scalar_matches_closed_form_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..200 {
            let n = rng.gen_range(1..=10u32);
            let f = BooleanFunction::from_table(
                n,
                (0..1u64 << n).map(|_| rng.gen_range(0..=1u8)).collect(),
            )
            .unwrap();
            let r = run::<f64>(&f, RepKind::CartanGeneral).unwrap();
            assert_eq!(r.scalar, f.signed_sum() as f64);
        }
    }

    #[test]
    fn modes_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..50 {
            let n = rng.gen_range(1..=7u32);
            let f = BooleanFunction::from_table(
                n,
                (0..1u64 << n).map(|_| rng.gen_range(0..=1u8)).collect(),
            )
            .unwrap();
            let kind = RepKind::default_for(n + 1);
            let fast = run_with_mode::<f64>(&f, kind, PipelineMode::ScalarOnly).unwrap();
            let full = run_with_mode::<f64>(&f, kind, PipelineMode::FullProduct).unwrap();
            assert_eq!(fast, full);
        }
    }

    /// The oracle does not commute with left multiplication: applying `E_f`
    /// then multiplying by `F_{n+1}` differs from multiplying first and
    /// applying the oracle to the product.
    #[test]
    fn order_caveat_witness() {
        let f = BooleanFunction::from_table(1, vec![0, 1]).unwrap();
        let reversal = build_reversal_operator::<f64>(1).unwrap();
        let witness = mv(2, &[(0b10, 1.0)]); // e_10

        let oracle_first = reversal
            .geometric_product(&apply_oracle(&f, &witness).unwrap())
            .unwrap();
        let multiply_first =
            apply_oracle(&f, &reversal.geometric_product(&witness).unwrap()).unwrap();
        assert_ne!(oracle_first, multiply_first);
        assert_eq!(oracle_first, mv(2, &[(0b11, 1.0), (0b01, 1.0)]));
        assert_eq!(multiply_first, mv(2, &[(0b11, 1.0), (0b00, 1.0)]));

        // With a genuinely fixed right factor the product is associative;
        // the trap is that E_f's factor varies per term.
        let fixed = mv(2, &[(0b01, 1.0)]); // e_{0,f(1)} for the witness blade
        let assoc_l = reversal
            .geometric_product(&witness.geometric_product(&fixed).unwrap())
            .unwrap();
        let assoc_r = reversal
            .geometric_product(&witness)
            .unwrap()
            .geometric_product(&fixed)
            .unwrap();
        assert_eq!(assoc_l, assoc_r);
        assert_ne!(assoc_r, multiply_first);
    }
}
