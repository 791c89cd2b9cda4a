//! Parsing of the `--f` argument: builtin names, inline truth tables, or
//! truth-table files.
//!
//! File format: optional `#` comment lines, then one line of exactly `2^n`
//! characters `0`/`1`; index `x` is the big-endian value of the input bits.

use std::fs;
use std::path::Path;

use gadj_core::BooleanFunction;

#[derive(Debug, Clone)]
pub enum FunctionSpec {
    Const0,
    Const1,
    Parity,
    Table(String),
    File(String),
}

impl FunctionSpec {
    pub fn parse(s: &str) -> Result<Self, String> {
        match s {
            "const0" => Ok(FunctionSpec::Const0),
            "const1" => Ok(FunctionSpec::Const1),
            "parity" => Ok(FunctionSpec::Parity),
            _ => {
                if let Some(bits) = s.strip_prefix("table:") {
                    Ok(FunctionSpec::Table(bits.to_string()))
                } else if let Some(path) = s.strip_prefix("file:") {
                    Ok(FunctionSpec::File(path.to_string()))
                } else if Path::new(s).exists() {
                    Ok(FunctionSpec::File(s.to_string()))
                } else {
                    Err(format!(
                        "unknown function spec '{s}': expected const0, const1, parity, \
                         table:<bits>, or file:<path>"
                    ))
                }
            }
        }
    }

    pub fn resolve(&self, n: u32) -> Result<BooleanFunction, String> {
        match self {
            FunctionSpec::Const0 => BooleanFunction::constant(n, 0).map_err(|e| e.to_string()),
            FunctionSpec::Const1 => BooleanFunction::constant(n, 1).map_err(|e| e.to_string()),
            FunctionSpec::Parity => BooleanFunction::parity(n).map_err(|e| e.to_string()),
            FunctionSpec::Table(bits) => table_from_str(n, bits),
            FunctionSpec::File(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| format!("cannot read truth table file '{path}': {e}"))?;
                let line = text
                    .lines()
                    .map(str::trim)
                    .find(|l| !l.is_empty() && !l.starts_with('#'))
                    .ok_or_else(|| format!("no truth table line in '{path}'"))?;
                table_from_str(n, line)
            }
        }
    }
}

fn table_from_str(n: u32, bits: &str) -> Result<BooleanFunction, String> {
    let expected = 1usize << n;
    if bits.len() != expected {
        return Err(format!(
            "truth table has {} characters, expected {expected} for n={n}",
            bits.len()
        ));
    }
    let table: Vec<u8> = bits
        .chars()
        .map(|c| match c {
            '0' => Ok(0),
            '1' => Ok(1),
            other => Err(format!("invalid truth table character '{other}'")),
        })
        .collect::<Result<_, _>>()?;
    BooleanFunction::from_table(n, table).map_err(|e| e.to_string())
}
