//! Truth tables of Boolean functions `f: {0,1}^n -> {0,1}`, the oracle
//! content for both Deutsch-Jozsa backends. Index `x` is the big-endian
//! value of the input string `A_1…A_n` (`A_1` most significant).

use crate::error::GaError;

/// Inputs are capped so tables and sweeps stay desk-scale.
pub const MAX_INPUT_BITS: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    n: u32,
    table: Vec<u8>,
}

impl BooleanFunction {
    pub fn from_table(n: u32, table: Vec<u8>) -> Result<Self, GaError> {
        if n == 0 || n > MAX_INPUT_BITS {
            return Err(GaError::InputBits {
                n,
                max: MAX_INPUT_BITS,
            });
        }
        let expected = 1usize << n;
        if table.len() != expected || table.iter().any(|&b| b > 1) {
            return Err(GaError::TableLength {
                len: table.len(),
                expected,
            });
        }
        Ok(BooleanFunction { n, table })
    }

    /// The constant function with the given output bit.
    pub fn constant(n: u32, value: u8) -> Result<Self, GaError> {
        BooleanFunction::from_table(n, vec![value & 1; 1usize << n])
    }

    /// XOR of all input bits; balanced for every `n`.
    pub fn parity(n: u32) -> Result<Self, GaError> {
        let table = (0..1u64 << n)
            .map(|x| (x.count_ones() & 1) as u8)
            .collect();
        BooleanFunction::from_table(n, table)
    }

    /// Function number `index`: bit `x` of `index` is `f(x)`. Enumerates all
    /// `2^{2^n}` functions as `index` runs over that range (requires
    /// `n <= 6` so the index fits in a `u64`).
    pub fn from_index(n: u32, index: u64) -> Result<Self, GaError> {
        assert!(n <= 6, "function index enumeration requires n <= 6");
        let table = (0..1u64 << n).map(|x| ((index >> x) & 1) as u8).collect();
        BooleanFunction::from_table(n, table)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn eval(&self, x: u64) -> u8 {
        self.table[x as usize]
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    /// Number of inputs mapped to 1.
    pub fn ones(&self) -> usize {
        self.table.iter().filter(|&&b| b == 1).count()
    }

    pub fn is_constant(&self) -> bool {
        let ones = self.ones();
        ones == 0 || ones == self.table.len()
    }

    pub fn is_balanced(&self) -> bool {
        self.ones() * 2 == self.table.len()
    }

    /// `Σ_x (-1)^{f(x)}`, the closed-form readout both backends reduce to.
    pub fn signed_sum(&self) -> i64 {
        self.table.len() as i64 - 2 * self.ones() as i64
    }
}
