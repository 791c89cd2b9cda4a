//! Sparse real linear combinations of blades.
//!
//! Terms are held either as a mask-sorted map or, when the combination is
//! dense enough (more than half of all `2^m` blades present), as a flat
//! coefficient array; both forms satisfy the same contract and switch
//! automatically. Zero coefficients are never stored — pruning is exact,
//! no epsilon, since the algorithms here use only integer-valued
//! coefficients and an epsilon would mask sign bugs.

use std::collections::BTreeMap;
use std::fmt;

use crate::blade::{self, Blade};
use crate::error::GaError;
use crate::scalar::Scalar;

/// Largest generator count for which the dense array form is considered.
const DENSE_MAX_M: u32 = 26;

#[derive(Debug, Clone)]
enum Repr<T> {
    Sparse(BTreeMap<u64, T>),
    Dense(Vec<T>),
}

/// A real linear combination of basis blades over `m` generators.
#[derive(Debug, Clone)]
pub struct Multivector<T: Scalar> {
    m: u32,
    repr: Repr<T>,
}

impl<T: Scalar> Multivector<T> {
    /// The zero multivector.
    pub fn zero(m: u32) -> Result<Self, GaError> {
        Blade::scalar(m)?;
        Ok(Multivector {
            m,
            repr: Repr::Sparse(BTreeMap::new()),
        })
    }

    /// A single blade with coefficient `coeff`.
    pub fn term(blade: Blade, coeff: T) -> Self {
        let mut map = BTreeMap::new();
        if coeff != T::zero() {
            map.insert(blade.mask(), coeff);
        }
        Multivector {
            m: blade.generators(),
            repr: Repr::Sparse(map),
        }
    }

    /// The scalar `c·e_{0…0}`.
    pub fn scalar(c: T, m: u32) -> Result<Self, GaError> {
        Ok(Multivector::term(Blade::scalar(m)?, c))
    }

    /// Build from `(mask, coefficient)` pairs; duplicate masks are summed.
    pub fn from_terms(
        m: u32,
        terms: impl IntoIterator<Item = (u64, T)>,
    ) -> Result<Self, GaError> {
        Blade::scalar(m)?;
        let mut map: BTreeMap<u64, T> = BTreeMap::new();
        for (mask, c) in terms {
            if mask >> m != 0 {
                return Err(GaError::MaskOutOfRange { mask, m });
            }
            *map.entry(mask).or_insert_with(T::zero) += c;
        }
        map.retain(|_, c| *c != T::zero());
        Ok(Multivector {
            m,
            repr: Repr::Sparse(map),
        }
        .normalized())
    }

    fn from_dense(m: u32, coeffs: Vec<T>) -> Self {
        debug_assert_eq!(coeffs.len(), 1usize << m);
        Multivector {
            m,
            repr: Repr::Dense(coeffs),
        }
        .normalized()
    }

    /// Re-pick the representation from the current term count.
    fn normalized(self) -> Self {
        let m = self.m;
        let count = self.num_terms();
        let want_dense = m <= DENSE_MAX_M && count > (1usize << m) / 2;
        match (want_dense, self.repr) {
            (true, Repr::Sparse(map)) => {
                let mut coeffs = vec![T::zero(); 1usize << m];
                for (mask, c) in map {
                    coeffs[mask as usize] = c;
                }
                Multivector {
                    m,
                    repr: Repr::Dense(coeffs),
                }
            }
            (false, Repr::Dense(coeffs)) => {
                let map = coeffs
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| *c != T::zero())
                    .map(|(i, c)| (i as u64, c))
                    .collect();
                Multivector {
                    m,
                    repr: Repr::Sparse(map),
                }
            }
            (_, repr) => Multivector { m, repr },
        }
    }

    pub fn generators(&self) -> u32 {
        self.m
    }

    /// Number of stored (nonzero) terms.
    pub fn num_terms(&self) -> usize {
        match &self.repr {
            Repr::Sparse(map) => map.len(),
            Repr::Dense(v) => v.iter().filter(|c| **c != T::zero()).count(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num_terms() == 0
    }

    /// Coefficient of the blade with the given mask (zero when absent).
    pub fn coeff(&self, mask: u64) -> T {
        match &self.repr {
            Repr::Sparse(map) => map.get(&mask).copied().unwrap_or_else(T::zero),
            Repr::Dense(v) => v.get(mask as usize).copied().unwrap_or_else(T::zero),
        }
    }

    /// Nonzero terms in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, T)> + '_ {
        let (sparse, dense) = match &self.repr {
            Repr::Sparse(map) => (Some(map.iter()), None),
            Repr::Dense(v) => (None, Some(v.iter().enumerate())),
        };
        sparse
            .into_iter()
            .flatten()
            .map(|(&mask, &c)| (mask, c))
            .chain(
                dense
                    .into_iter()
                    .flatten()
                    .filter(|(_, c)| **c != T::zero())
                    .map(|(i, &c)| (i as u64, c)),
            )
    }

    fn check_same_m(&self, other: &Self) -> Result<(), GaError> {
        if self.m != other.m {
            return Err(GaError::DimensionMismatch {
                left: self.m,
                right: other.m,
            });
        }
        Ok(())
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &Self) -> Result<Self, GaError> {
        self.check_same_m(other)?;
        let mut map: BTreeMap<u64, T> = self.terms().collect();
        for (mask, c) in other.terms() {
            let entry = map.entry(mask).or_insert_with(T::zero);
            *entry += c;
            if *entry == T::zero() {
                map.remove(&mask);
            }
        }
        Ok(Multivector {
            m: self.m,
            repr: Repr::Sparse(map),
        }
        .normalized())
    }

    pub fn sub(&self, other: &Self) -> Result<Self, GaError> {
        self.add(&other.scale(-T::one()))
    }

    /// Every coefficient multiplied by `c`.
    pub fn scale(&self, c: T) -> Self {
        if c == T::zero() {
            return Multivector {
                m: self.m,
                repr: Repr::Sparse(BTreeMap::new()),
            };
        }
        let mut out = self.clone();
        match &mut out.repr {
            Repr::Sparse(map) => {
                for v in map.values_mut() {
                    *v *= c;
                }
            }
            Repr::Dense(v) => {
                for x in v.iter_mut() {
                    *x *= c;
                }
            }
        }
        out
    }

    /// Geometric product, bilinear extension of the blade product.
    pub fn geometric_product(&self, other: &Self) -> Result<Self, GaError> {
        self.check_same_m(other)?;
        let m = self.m;
        if m <= DENSE_MAX_M {
            let mut acc = vec![T::zero(); 1usize << m];
            for (ma, ca) in self.terms() {
                for (mb, cb) in other.terms() {
                    let sign = blade::product_sign_masks(ma, mb);
                    let c = ca * cb * T::from_int(sign as i64);
                    acc[(ma ^ mb) as usize] += c;
                }
            }
            Ok(Multivector::from_dense(m, acc))
        } else {
            let mut acc: BTreeMap<u64, T> = BTreeMap::new();
            for (ma, ca) in self.terms() {
                for (mb, cb) in other.terms() {
                    let sign = blade::product_sign_masks(ma, mb);
                    let c = ca * cb * T::from_int(sign as i64);
                    *acc.entry(ma ^ mb).or_insert_with(T::zero) += c;
                }
            }
            acc.retain(|_, c| *c != T::zero());
            Ok(Multivector {
                m,
                repr: Repr::Sparse(acc),
            }
            .normalized())
        }
    }

    /// Reverse (†): each term picks up `(-1)^{k(k-1)/2}` for its grade `k`.
    pub fn reverse(&self) -> Self {
        let terms = self
            .terms()
            .map(|(mask, c)| {
                let s = blade::grade_reverse_sign(mask.count_ones());
                (mask, c * T::from_int(s as i64))
            })
            .collect::<Vec<_>>();
        Multivector::from_terms(self.m, terms).expect("masks already validated")
    }

    /// Coefficient of the scalar blade `e_{0…0}`.
    pub fn scalar_part(&self) -> T {
        self.coeff(0)
    }

    /// Scalar part of `self · other` without forming the full product.
    ///
    /// Only term pairs with equal masks land on the scalar blade, so this
    /// walks the shorter operand and matches masks:
    /// `Σ_mask x[mask]·y[mask]·sign(e_mask e_mask)`.
    pub fn scalar_of_product(&self, other: &Self) -> Result<T, GaError> {
        self.check_same_m(other)?;
        let (walk, probe) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = T::zero();
        for (mask, c) in walk.terms() {
            let oc = probe.coeff(mask);
            if oc != T::zero() {
                // e_A e_A = (-1)^{k(k-1)/2}, symmetric in the operands.
                acc += c * oc * T::from_int(blade::square_sign(mask) as i64);
            }
        }
        Ok(acc)
    }

    /// Number of blade-pair products the full geometric product would
    /// perform, and the number the scalar fast path performs.
    pub fn pairing_counts(&self, other: &Self) -> (u64, u64) {
        let full = self.num_terms() as u64 * other.num_terms() as u64;
        let matched = self
            .terms()
            .filter(|(mask, _)| other.coeff(*mask) != T::zero())
            .count() as u64;
        (full, matched)
    }
}

impl<T: Scalar> PartialEq for Multivector<T> {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.terms().eq(other.terms())
    }
}

impl<T: Scalar> fmt::Display for Multivector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (mask, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(
                f,
                "{}{}\u{b7}{}",
                if c < T::zero() { '-' } else { '+' },
                c.abs(),
                Blade::new(mask, self.m).unwrap()
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Mv = Multivector<f64>;

    fn mv(m: u32, terms: &[(u64, f64)]) -> Mv {
        Multivector::from_terms(m, terms.iter().copied()).unwrap()
    }

    #[test]
    fn add_examples() {
        // (e_1 + e_2) + (-e_2) = e_1
        let x = mv(2, &[(0b10, 1.0), (0b01, 1.0)]);
        let y = mv(2, &[(0b01, -1.0)]);
        assert_eq!(x.add(&y).unwrap(), mv(2, &[(0b10, 1.0)]));

        let z = Mv::zero(2).unwrap();
        assert_eq!(x.add(&z).unwrap(), x);

        let one = mv(2, &[(0, 1.0)]);
        assert_eq!(one.add(&one).unwrap(), mv(2, &[(0, 2.0)]));
    }

    #[test]
    fn product_examples() {
        // (e_00 + e_10)·e_10 = e_10 + e_00
        let x = mv(2, &[(0b00, 1.0), (0b10, 1.0)]);
        let e10 = mv(2, &[(0b10, 1.0)]);
        assert_eq!(
            x.geometric_product(&e10).unwrap(),
            mv(2, &[(0b00, 1.0), (0b10, 1.0)])
        );

        // E_2·e_10 = e_10 + e_00 - e_11 - e_01
        let e2 = mv(2, &[(0b00, 1.0), (0b10, 1.0), (0b01, 1.0), (0b11, 1.0)]);
        assert_eq!(
            e2.geometric_product(&e10).unwrap(),
            mv(2, &[(0b00, 1.0), (0b10, 1.0), (0b11, -1.0), (0b01, -1.0)])
        );

        // F_2·(E_f E_2 e_10) = 0 for the balanced f(0)=0, f(1)=1
        let f2 = mv(2, &[(0b00, 1.0), (0b10, 1.0)]);
        let z = mv(2, &[(0b11, 1.0), (0b00, 1.0), (0b10, -1.0), (0b01, -1.0)]);
        assert!(f2.geometric_product(&z).unwrap().is_zero());
    }

    #[test]
    fn reverse_examples() {
        let f2 = mv(2, &[(0b00, 1.0), (0b10, 1.0)]);
        assert_eq!(f2.reverse(), f2);

        let e110 = mv(3, &[(0b110, 1.0)]);
        assert_eq!(e110.reverse(), mv(3, &[(0b110, -1.0)]));

        let x = mv(3, &[(0b110, 2.0), (0b111, -1.0), (0b001, 3.0)]);
        assert_eq!(x.reverse().reverse(), x);
    }

    #[test]
    fn scalar_part_examples() {
        let x = mv(2, &[(0, 3.0), (0b10, 2.0)]);
        assert_eq!(x.scalar_part(), 3.0);
        assert_eq!(mv(2, &[(0b10, 1.0)]).scalar_part(), 0.0);
    }

    #[test]
    fn scalar_of_product_examples() {
        let e1 = mv(2, &[(0b10, 1.0)]);
        let e2 = mv(2, &[(0b01, 1.0)]);
        assert_eq!(e1.scalar_of_product(&e1).unwrap(), 1.0);
        assert_eq!(e1.scalar_of_product(&e2).unwrap(), 0.0);
    }

    #[test]
    fn dimension_mismatch() {
        let x = mv(2, &[(0, 1.0)]);
        let y = mv(3, &[(0, 1.0)]);
        assert!(x.add(&y).is_err());
        assert!(x.geometric_product(&y).is_err());
        assert!(x.scalar_of_product(&y).is_err());
    }

    #[test]
    fn dense_switch_is_transparent() {
        // All 2^m blades present forces the dense form; arithmetic and
        // iteration must not change.
        let m = 4;
        let full: Mv =
            Multivector::from_terms(m, (0..1u64 << m).map(|k| (k, 1.0))).unwrap();
        assert!(matches!(full.repr, Repr::Dense(_)));
        assert_eq!(full.num_terms(), 16);
        let seed = mv(m, &[(0b0010, 1.0)]);
        let prod = full.geometric_product(&seed).unwrap();
        assert_eq!(prod.num_terms(), 16);
        let back = prod.geometric_product(&seed).unwrap();
        assert_eq!(back, full);
    }

    #[test]
    fn display_rendering() {
        let x = mv(2, &[(0b00, 1.0), (0b11, -1.0)]);
        assert_eq!(x.to_string(), "+1\u{b7}1 -1\u{b7}e_11");
        assert_eq!(Mv::zero(2).unwrap().to_string(), "0");
    }

    /// Random integer-coefficient multivector, up to `max_terms` terms.
    fn arb_mv(m: u32, max_terms: usize) -> impl Strategy<Value = Mv> {
        prop::collection::vec(
            (0..1u64 << m, -4i64..=4),
            0..=max_terms,
        )
        .prop_map(move |pairs| {
            Multivector::from_terms(m, pairs.into_iter().map(|(k, c)| (k, c as f64)))
                .unwrap()
        })
    }

    proptest! {
        #[test]
        fn distributivity(
            (x, y, z) in (1u32..=10).prop_flat_map(|m| (arb_mv(m, 8), arb_mv(m, 8), arb_mv(m, 8)))
        ) {
            let lhs = x.geometric_product(&y.add(&z).unwrap()).unwrap();
            let rhs = x.geometric_product(&y).unwrap().add(&x.geometric_product(&z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn reverse_anti_automorphism(
            (x, y) in (1u32..=10).prop_flat_map(|m| (arb_mv(m, 8), arb_mv(m, 8)))
        ) {
            let lhs = x.geometric_product(&y).unwrap().reverse();
            let rhs = y.reverse().geometric_product(&x.reverse()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn fast_path_matches_full_product(
            (x, y) in (1u32..=10).prop_flat_map(|m| (arb_mv(m, 10), arb_mv(m, 10)))
        ) {
            let fast = x.scalar_of_product(&y).unwrap();
            let full = x.geometric_product(&y).unwrap().scalar_part();
            prop_assert_eq!(fast, full);
        }

        #[test]
        fn associativity(
            (x, y, z) in (1u32..=8).prop_flat_map(|m| (arb_mv(m, 6), arb_mv(m, 6), arb_mv(m, 6)))
        ) {
            let lhs = x.geometric_product(&y).unwrap().geometric_product(&z).unwrap();
            let rhs = x.geometric_product(&y.geometric_product(&z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
