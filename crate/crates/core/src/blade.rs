//! Basis blades in binary parametrization.
//!
//! A blade over `m` generators is an `m`-bit string `A_1…A_m`; bit `A_j`
//! marks whether generator `e_j` participates. `A_1` is the most significant
//! bit of the window, so the printed bitstring reads left to right exactly
//! like the index string. The geometric product of two blades XORs the
//! masks and carries a sign `(-1)^D`, where `D` counts how many times a 1
//! of the right string jumps over a 1 of the left string while the two
//! index lists are merged into sorted order.

use std::fmt;

use crate::error::GaError;

/// Masks must fit one machine word.
pub const MAX_GENERATORS: u32 = 63;

/// A basis blade: bitmask over generator indices plus the generator count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade {
    mask: u64,
    m: u32,
}

/// A blade together with a sign in `{+1, -1}`, as produced by products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedBlade {
    pub sign: i32,
    pub blade: Blade,
}

impl Blade {
    /// Blade from an explicit mask. Bit `m - j` of `mask` carries `A_j`.
    pub fn new(mask: u64, m: u32) -> Result<Self, GaError> {
        if m == 0 || m > MAX_GENERATORS {
            return Err(GaError::GeneratorCount {
                m,
                max: MAX_GENERATORS,
            });
        }
        if mask >> m != 0 {
            return Err(GaError::MaskOutOfRange { mask, m });
        }
        Ok(Blade { mask, m })
    }

    /// The scalar blade `e_{0…0}`.
    pub fn scalar(m: u32) -> Result<Self, GaError> {
        Blade::new(0, m)
    }

    /// Blade from 1-based generator indices, e.g. `[1, 2, 5]` for `e_{125}`.
    pub fn from_indices(indices: &[u32], m: u32) -> Result<Self, GaError> {
        let mut mask = 0u64;
        for &j in indices {
            if j == 0 || j > m {
                return Err(GaError::MaskOutOfRange { mask: 1 << 63, m });
            }
            mask |= 1 << (m - j);
        }
        Blade::new(mask, m)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn generators(&self) -> u32 {
        self.m
    }

    /// Number of generators in the blade.
    pub fn grade(&self) -> u32 {
        self.mask.count_ones()
    }

    /// Whether generator `j` (1-based) participates.
    pub fn bit(&self, j: u32) -> bool {
        debug_assert!(j >= 1 && j <= self.m);
        (self.mask >> (self.m - j)) & 1 == 1
    }

    /// Ascending 1-based generator indices, e.g. `e_{125}` → `[1, 2, 5]`.
    pub fn indices(&self) -> Vec<u32> {
        (1..=self.m).filter(|&j| self.bit(j)).collect()
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return write!(f, "1");
        }
        write!(f, "e_")?;
        for j in 1..=self.m {
            write!(f, "{}", u8::from(self.bit(j)))?;
        }
        Ok(())
    }
}

fn check_same_m(a: Blade, b: Blade) -> Result<(), GaError> {
    if a.m != b.m {
        return Err(GaError::DimensionMismatch {
            left: a.m,
            right: b.m,
        });
    }
    Ok(())
}

/// Sign of the product of the blades with the given masks, as `(-1)^D` with
/// `D = Σ_{k<l} B_k A_l` (left mask `A`, right mask `B`).
///
/// For each set bit of `b` the strictly less significant bits of `a` are the
/// positions `l > k`, so `D` is a prefix-popcount scan over the set bits of
/// `b`. Exact integer arithmetic throughout.
pub(crate) fn product_sign_masks(a: u64, mut b: u64) -> i32 {
    let mut d = 0u32;
    while b != 0 {
        let bit = b.trailing_zeros();
        d += (a & ((1u64 << bit) - 1)).count_ones();
        b &= b - 1;
    }
    if d.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Geometric product of two blades: mask XOR, sign `(-1)^D`.
pub fn blade_product(a: Blade, b: Blade) -> Result<SignedBlade, GaError> {
    check_same_m(a, b)?;
    Ok(SignedBlade {
        sign: product_sign_masks(a.mask, b.mask),
        blade: Blade {
            mask: a.mask ^ b.mask,
            m: a.m,
        },
    })
}

/// Sign of `e_A e_A`, used by the scalar-only product fast path.
pub(crate) fn square_sign(mask: u64) -> i32 {
    grade_reverse_sign(mask.count_ones())
}

pub(crate) fn grade_reverse_sign(k: u32) -> i32 {
    if (k * k.wrapping_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign of the reverse of a grade-`k` blade: `(-1)^{k(k-1)/2}`.
pub fn reverse_sign(a: Blade) -> i32 {
    grade_reverse_sign(a.grade())
}

/// Brute-force transposition-count oracle for the product sign.
///
/// Concatenates the ordered generator-index lists of `a` and `b` and bubble
/// sorts the result, flipping the sign on every swap of distinct adjacent
/// indices and annihilating adjacent equal pairs (`e_j e_j = 1`). Exists
/// purely as an independent check of [`blade_product`].
pub fn sign_oracle(a: Blade, b: Blade) -> Result<i32, GaError> {
    check_same_m(a, b)?;
    let mut list = a.indices();
    list.extend(b.indices());
    let mut sign = 1i32;
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < list.len() {
            if list[i] == list[i + 1] {
                list.drain(i..i + 2);
                changed = true;
            } else if list[i] > list[i + 1] {
                list.swap(i, i + 1);
                sign = -sign;
                changed = true;
                i += 1;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    debug_assert!(list.windows(2).all(|w| w[0] < w[1]));
    Ok(sign)
}
