use crate::cartan::RepKind;

/// Errors raised by the algebra and its backends.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GaError {
    #[error("generator count mismatch: {left} vs {right}")]
    DimensionMismatch { left: u32, right: u32 },
    #[error("generator count {m} out of range (1..={max})")]
    GeneratorCount { m: u32, max: u32 },
    #[error("mask {mask:#x} has bits outside the {m}-generator window")]
    MaskOutOfRange { mask: u64, m: u32 },
    #[error("{kind:?} representation is not defined for {m} generators")]
    InvalidRepresentation { kind: RepKind, m: u32 },
    #[error("input bit count {n} out of range (1..={max})")]
    InputBits { n: u32, max: u32 },
    #[error("qubit count {q} out of range (1..={max})")]
    QubitCount { q: u32, max: u32 },
    #[error("truth table has {len} entries, expected {expected}")]
    TableLength { len: usize, expected: usize },
}
