//! Homeomorphism type of a closed simply connected 4-manifold from its
//! signature, Euler characteristic and spin flag.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::FibrationError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Block {
    CP2,
    CP2Bar,
    E2,
    E2Bar,
    S2xS2,
}

impl Block {
    /// `(b₂⁺, b₂⁻)`
    pub fn b2(self) -> (u64, u64) {
        match self {
            Block::CP2 => (1, 0),
            Block::CP2Bar => (0, 1),
            Block::E2 => (3, 19),
            Block::E2Bar => (19, 3),
            Block::S2xS2 => (1, 1),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Block::CP2 => "CP²",
            Block::CP2Bar => "CP̄²",
            Block::E2 => "E(2)",
            Block::E2Bar => "Ē(2)",
            Block::S2xS2 => "S²×S²",
        }
    }
}

/// A connected sum of standard pieces; empty means `S⁴`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub spin: bool,
    pub blocks: Vec<(Block, u64)>,
}

impl Decomposition {
    pub fn b2(&self) -> (u64, u64) {
        self.blocks.iter().fold((0, 0), |(p, q), (b, k)| {
            let (bp, bq) = b.b2();
            (p + k * bp, q + k * bq)
        })
    }

    pub fn signature(&self) -> i64 {
        let (p, q) = self.b2();
        p as i64 - q as i64
    }

    /// χ of the connected sum: each summand has χ = 2 + b₂ and every `#`
    /// costs 2.
    pub fn euler(&self) -> i64 {
        let (p, q) = self.b2();
        2 + p as i64 + q as i64
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<_> = self.blocks.iter().filter(|(_, k)| *k > 0).collect();
        if parts.is_empty() {
            return write!(f, "S⁴");
        }
        if !self.spin {
            let s: Vec<String> = parts.iter().map(|(b, k)| format!("{k}{}", b.name())).collect();
            return write!(f, "#{}", s.join(" # "));
        }
        let s: Vec<String> = parts
            .iter()
            .map(|(b, k)| match (b, k) {
                (Block::S2xS2, 1) if parts.len() == 1 => b.name().to_string(),
                (Block::S2xS2, 1) => format!("({})", b.name()),
                (Block::S2xS2, k) => format!("{k}({})", b.name()),
                (b, 1) => b.name().to_string(),
                (b, k) => format!("{k}{}", b.name()),
            })
            .collect();
        write!(f, "{}", s.join(" # "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Homeomorphism {
    Determined(Decomposition),
    Indeterminate { reason: String },
}

impl fmt::Display for Homeomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Homeomorphism::Determined(d) => write!(f, "{d}"),
            Homeomorphism::Indeterminate { reason } => write!(f, "indeterminate ({reason})"),
        }
    }
}

pub fn homeomorphism_report(
    sig: i64,
    euler: i64,
    spin: bool,
    simply_connected: bool,
) -> Result<Homeomorphism, FibrationError> {
    if !simply_connected {
        return Ok(Homeomorphism::Indeterminate {
            reason: "total space not asserted simply connected".into(),
        });
    }
    let b2 = euler - 2;
    if b2 < 0 || b2 < sig.abs() {
        return Err(FibrationError::Homeomorphism(format!(
            "b₂ = {b2} cannot carry signature {sig}"
        )));
    }
    if (b2 + sig) % 2 != 0 {
        return Err(FibrationError::Homeomorphism(format!(
            "b₂ = {b2} and signature {sig} have different parity"
        )));
    }
    let (p, q) = (((b2 + sig) / 2) as u64, ((b2 - sig) / 2) as u64);
    if !spin {
        let blocks = vec![(Block::CP2, p), (Block::CP2Bar, q)].into_iter().filter(|(_, k)| *k > 0).collect();
        return Ok(Homeomorphism::Determined(Decomposition { spin, blocks }));
    }
    if sig % 16 != 0 {
        return Err(FibrationError::Rokhlin(sig));
    }
    let a = sig.unsigned_abs() / 16;
    let rest = b2 as u64;
    if rest < 22 * a || (rest - 22 * a) % 2 != 0 {
        return Err(FibrationError::Homeomorphism(format!(
            "no spin decomposition with {a} E(2) summands and b₂ = {b2}"
        )));
    }
    let b = (rest - 22 * a) / 2;
    let e = if sig > 0 { Block::E2Bar } else { Block::E2 };
    let blocks = vec![(e, a), (Block::S2xS2, b)].into_iter().filter(|(_, k)| *k > 0).collect();
    Ok(Homeomorphism::Determined(Decomposition { spin, blocks }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn text(sig: i64, e: i64, spin: bool) -> String {
        homeomorphism_report(sig, e, spin, true).unwrap().to_string()
    }

    #[test]
    fn examples() {
        assert_eq!(text(-4, 10, false), "#2CP² # 6CP̄²");
        assert_eq!(text(-16, 30, true), "E(2) # 3(S²×S²)");
        assert_eq!(text(0, 4, true), "S²×S²");
        assert_eq!(text(-16, 26, true), "E(2) # (S²×S²)");
        assert_eq!(text(0, 2, false), "S⁴");
        assert_eq!(text(0, 2, true), "S⁴");
        assert_eq!(text(32, 46, true), "2Ē(2)");
        assert_eq!(text(0, 8, true), "3(S²×S²)");
    }

    #[test]
    fn recomposition() {
        for (sig, e, spin) in [(-4, 10, false), (-16, 30, true), (-16, 26, true), (48, 70, true), (-3, 7, false)] {
            let Homeomorphism::Determined(d) = homeomorphism_report(sig, e, spin, true).unwrap() else {
                panic!()
            };
            assert_eq!((d.signature(), d.euler()), (sig, e));
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(homeomorphism_report(-8, 12, true, true), Err(FibrationError::Rokhlin(-8))));
        assert!(homeomorphism_report(-4, 3, false, true).is_err());
        assert!(homeomorphism_report(-3, 10, false, true).is_err());
        assert!(homeomorphism_report(-16, 20, true, true).is_err());
        assert!(matches!(
            homeomorphism_report(-4, 10, false, false).unwrap(),
            Homeomorphism::Indeterminate { .. }
        ));
    }
}
