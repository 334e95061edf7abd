//! Braiding input files: `{"theta": θ, "conductor": N, "q_exponents": [[k_ij]]}` with `q_ij = ζ_N^{k_ij}`.

use std::io::Read;

use nichols::freealgebra::BraidingMatrix;
use serde::Deserialize;

pub const DEFAULT_MAX_THETA: usize = 8;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidingInput {
    pub theta: usize,
    pub conductor: u32,
    pub q_exponents: Vec<Vec<i64>>,
}

pub fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("<stdin>: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

pub fn parse(src: &str, name: &str, max_theta: usize) -> Result<BraidingMatrix, String> {
    let inp: BraidingInput =
        serde_json::from_str(src).map_err(|e| format!("{name}:{}:{}: {e}", e.line(), e.column()))?;
    inp.validate(max_theta).map_err(|e| format!("{name}: {e}"))
}

impl BraidingInput {
    pub fn validate(&self, max_theta: usize) -> Result<BraidingMatrix, String> {
        if self.theta == 0 || self.theta > max_theta {
            return Err(format!("theta: {} is outside 1..={max_theta}", self.theta));
        }
        if self.conductor == 0 {
            return Err("conductor: must be positive".into());
        }
        if self.q_exponents.len() != self.theta {
            return Err(format!("q_exponents: expected {} rows, found {}", self.theta, self.q_exponents.len()));
        }
        for (i, row) in self.q_exponents.iter().enumerate() {
            if row.len() != self.theta {
                return Err(format!("q_exponents[{i}]: expected {} entries, found {}", self.theta, row.len()));
            }
            for (j, &k) in row.iter().enumerate() {
                if k < 0 || k >= self.conductor as i64 {
                    return Err(format!("q_exponents[{i}][{j}]: {k} is outside 0..{}", self.conductor));
                }
            }
        }
        BraidingMatrix::new(self.conductor, self.q_exponents.clone()).map_err(|e| format!("conductor: {e}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_valid() {
        let b = parse(r#"{"theta": 2, "conductor": 3, "q_exponents": [[1, 2], [0, 1]]}"#, "x", 8).unwrap();
        assert_eq!(b.theta(), 2);
        assert_eq!(b.exp(0, 1), 2);
    }

    #[test]
    fn reports_locations() {
        let e = parse(r#"{"theta": 2, "conductor": 3, "q_exponents": [[1, 2], [0, 3]]}"#, "x", 8).unwrap_err();
        assert!(e.contains("q_exponents[1][1]"), "{e}");
        let e = parse("{\"theta\": 2,\n \"conductor\": }", "f.json", 8).unwrap_err();
        assert!(e.starts_with("f.json:2:"), "{e}");
        let e = parse(r#"{"theta": 9, "conductor": 3, "q_exponents": []}"#, "x", 8).unwrap_err();
        assert!(e.contains("theta"), "{e}");
        let e = parse(r#"{"theta": 1, "conductor": 3, "q_exponents": [[1]], "extra": 0}"#, "x", 8).unwrap_err();
        assert!(e.contains("extra"), "{e}");
    }
}
