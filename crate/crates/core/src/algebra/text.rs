//! Structured text import/export for algebra specs.
//!
//! The document is whitespace-separated with `#` line comments:
//!
//! ```text
//! dim 4
//! table
//!   1 0 0 0   0 1 0 0   0 0 1 0   0 0 0 1
//!   ...                                       # dim³ rational entries
//! signature 1 -1 -1 -1                        # optional, ±1 per index
//! params 1 1                                  # optional, 2 (quaternion)
//!                                             # or 3 (octonion) rationals
//! ```

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::Error;
use crate::scalar::parse_rational;

use super::{AlgebraParams, AlgebraSpec};

impl AlgebraSpec {
    /// Serializes the spec as a structured text document that
    /// [`AlgebraSpec::from_text`] reads back.
    pub fn to_text(&self) -> String {
        let d = self.dim();
        let mut out = String::new();
        let _ = writeln!(out, "dim {d}");
        let _ = writeln!(out, "table");
        for i in 0..d {
            for j in 0..d {
                let _ = write!(out, " ");
                for k in 0..d {
                    let _ = write!(out, " {}", self.constant(i, j, k));
                }
            }
            let _ = writeln!(out);
        }
        if let Some(sig) = self.conj_signature() {
            let _ = write!(out, "signature");
            for s in sig {
                let _ = write!(out, " {s}");
            }
            let _ = writeln!(out);
        }
        if let Some(params) = self.params() {
            let _ = write!(out, "params");
            for p in params.values() {
                let _ = write!(out, " {p}");
            }
            let _ = writeln!(out);
        }
        out
    }

    /// Parses a structured text document into a validated spec.
    pub fn from_text(label: impl Into<String>, source: &str) -> Result<Arc<Self>, Error> {
        fn take<'a>(
            tokens: &mut impl Iterator<Item = &'a str>,
            what: &str,
        ) -> Result<&'a str, Error> {
            tokens
                .next()
                .ok_or_else(|| Error::Parse(format!("unexpected end of input, expected {what}")))
        }
        let mut tokens = source
            .lines()
            .map(|line| line.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);

        let keyword = take(&mut tokens, "`dim`")?;
        if keyword != "dim" {
            return Err(Error::Parse(format!("expected `dim`, found `{keyword}`")));
        }
        let dim: usize = take(&mut tokens, "dimension")?
            .parse()
            .map_err(|_| Error::Parse("bad dimension".into()))?;
        if dim == 0 || dim > 64 {
            return Err(Error::Parse(format!("unreasonable dimension {dim}")));
        }

        let keyword = take(&mut tokens, "`table`")?;
        if keyword != "table" {
            return Err(Error::Parse(format!("expected `table`, found `{keyword}`")));
        }
        let mut table = Vec::with_capacity(dim * dim * dim);
        for _ in 0..dim * dim * dim {
            table.push(parse_rational(take(&mut tokens, "structure constant")?)?);
        }

        let mut signature = None;
        let mut params = None;
        while let Some(section) = tokens.next() {
            match section {
                "signature" => {
                    let mut sig = Vec::with_capacity(dim);
                    for _ in 0..dim {
                        let v: i8 = take(&mut tokens, "signature entry")?
                            .parse()
                            .map_err(|_| Error::Parse("bad signature entry".into()))?;
                        sig.push(v);
                    }
                    signature = Some(sig);
                }
                "params" => {
                    let vals = match dim {
                        4 => 2,
                        8 => 3,
                        other => {
                            return Err(Error::Parse(format!(
                                "params are only meaningful for dimensions 4 and 8, not {other}"
                            )))
                        }
                    };
                    let mut ps = Vec::with_capacity(vals);
                    for _ in 0..vals {
                        ps.push(parse_rational(take(&mut tokens, "parameter")?)?);
                    }
                    params = Some(if vals == 2 {
                        AlgebraParams::Quaternion {
                            alpha: ps[0].clone(),
                            beta: ps[1].clone(),
                        }
                    } else {
                        AlgebraParams::Octonion {
                            alpha: ps[0].clone(),
                            beta: ps[1].clone(),
                            gamma: ps[2].clone(),
                        }
                    });
                }
                other => {
                    return Err(Error::Parse(format!("unknown section `{other}`")));
                }
            }
        }

        AlgebraSpec::custom(label, dim, table, signature, params)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    #[test]
    fn named_specs_roundtrip() {
        let specs = [
            AlgebraSpec::quaternion(rat_int(1), rat(-2, 3)),
            AlgebraSpec::octonion(rat_int(2), rat_int(1), rat(3, 7)),
        ];
        for spec in specs {
            let text = spec.to_text();
            let back = AlgebraSpec::from_text("roundtrip", &text).unwrap();
            assert_eq!(back.dim(), spec.dim());
            assert_eq!(back.params(), spec.params());
            assert_eq!(back.conj_signature(), spec.conj_signature());
            for i in 0..spec.dim() {
                for j in 0..spec.dim() {
                    for k in 0..spec.dim() {
                        assert_eq!(back.constant(i, j, k), spec.constant(i, j, k));
                    }
                }
            }
        }
    }

    #[test]
    fn comments_and_layout_are_free_form() {
        let text = "# the scalar algebra\n dim 1\n table 1 # unit cell\n";
        let spec = AlgebraSpec::from_text("scalar", text).unwrap();
        assert_eq!(spec.dim(), 1);
    }

    #[test]
    fn parse_errors_are_reported() {
        assert!(AlgebraSpec::from_text("x", "").is_err());
        assert!(AlgebraSpec::from_text("x", "dim 2 table 1 0 0 1 1 0").is_err());
        assert!(AlgebraSpec::from_text("x", "dim 1 table 1 bogus-section 3").is_err());
        // non-unital table is rejected with the violated cell named
        let err = AlgebraSpec::from_text(
            "x",
            "dim 2 table 1 0  0 0  0 1  0 0",
        )
        .unwrap_err();
        assert!(matches!(err, Error::NonUnitalTable { i: 0, j: 1, k: 1, .. }));
    }
}
