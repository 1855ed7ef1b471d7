//! Canonical JSON form of a presentation, optionally with an involution.
//!
//! ```json
//! {
//!   "kind": "lie",
//!   "p": 11,
//!   "dim": 3,
//!   "basis": ["e", "h", "f"],
//!   "structure": [
//!     [0, 1, 0, "9"],
//!     ...
//!   ]
//! }
//! ```
//!
//! Entries are sorted by `(i, j, k)`, scalars are decimal strings (canonical
//! residues over GF(p)). Writing what was read reproduces the bytes.

use serde::Deserialize;

use crate::algebra::{AlgebraKind, AlgebraPresentation, StructureTable};
use crate::constructions::InvolutionMap;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::ExactMatrix;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAlgebra {
    kind: String,
    p: u64,
    dim: usize,
    basis: Vec<String>,
    structure: Vec<(usize, usize, usize, String)>,
    #[serde(default)]
    involution: Option<Vec<Vec<String>>>,
}

#[derive(Clone, Debug)]
pub struct AlgebraFile {
    pub algebra: AlgebraPresentation,
    pub involution: Option<InvolutionMap>,
}

pub fn from_json(text: &str) -> Result<AlgebraFile> {
    let raw: RawAlgebra = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let kind = AlgebraKind::parse(&raw.kind)?;
    let field = FieldSpec::new(raw.p)?;
    if raw.basis.len() != raw.dim {
        return Err(Error::Parse(format!("{} basis labels for dim {}", raw.basis.len(), raw.dim)));
    }
    let mut entries = Vec::with_capacity(raw.structure.len());
    for (i, j, k, c) in raw.structure {
        entries.push((i, j, k, field.parse(&c)?));
    }
    let table = StructureTable::from_entries(field, raw.dim, entries)?;
    let algebra = AlgebraPresentation::new(kind, raw.basis, table)?;
    let involution = match raw.involution {
        None => None,
        Some(rows) => {
            if rows.len() != raw.dim || rows.iter().any(|r| r.len() != raw.dim) {
                return Err(Error::Parse("involution must be a dim x dim matrix".into()));
            }
            let data = rows.iter().flatten().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()?;
            let m = ExactMatrix::new(field, raw.dim, raw.dim, data)?;
            Some(InvolutionMap::new(&algebra, m)?)
        }
    };
    Ok(AlgebraFile { algebra, involution })
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("string serializes")
}

pub fn to_json(algebra: &AlgebraPresentation, involution: Option<&InvolutionMap>) -> String {
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"kind\": {},\n", quote(algebra.kind().as_str())));
    out.push_str(&format!("  \"p\": {},\n", algebra.field().characteristic()));
    out.push_str(&format!("  \"dim\": {},\n", algebra.dim()));
    let labels: Vec<String> = algebra.labels().iter().map(|l| quote(l)).collect();
    out.push_str(&format!("  \"basis\": [{}],\n", labels.join(", ")));
    let entries: Vec<String> = algebra.table().entries().map(|(i, j, k, c)| format!("    [{i}, {j}, {k}, {}]", quote(&c.to_string()))).collect();
    if entries.is_empty() {
        out.push_str("  \"structure\": []");
    } else {
        out.push_str("  \"structure\": [\n");
        out.push_str(&entries.join(",\n"));
        out.push_str("\n  ]");
    }
    if let Some(inv) = involution {
        let rows: Vec<String> =
            inv.matrix().to_string_rows().into_iter().map(|r| format!("    [{}]", r.iter().map(|s| quote(s)).collect::<Vec<_>>().join(", "))).collect();
        out.push_str(",\n  \"involution\": [\n");
        out.push_str(&rows.join(",\n"));
        out.push_str("\n  ]");
    }
    out.push_str("\n}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_matrix_lie, exchange_transpose_involution, heisenberg, matrix_pair_algebra, Series};

    #[test]
    fn lie_round_trip_is_byte_exact() {
        let l = build_matrix_lie(Series::Sl, 3, FieldSpec::prime(11).unwrap()).unwrap();
        let text = to_json(l.presentation(), None);
        let back = from_json(&text).unwrap();
        assert_eq!(to_json(&back.algebra, None), text);
        assert_eq!(back.algebra.table(), l.presentation().table());
    }

    #[test]
    fn involution_round_trip() {
        let f = FieldSpec::prime(5).unwrap();
        let r = matrix_pair_algebra(2, f).unwrap();
        let s = exchange_transpose_involution(&r, 2).unwrap();
        let text = to_json(&r, Some(&s));
        let back = from_json(&text).unwrap();
        assert_eq!(to_json(&back.algebra, back.involution.as_ref()), text);
    }

    #[test]
    fn rational_scalars_round_trip() {
        let q = FieldSpec::rationals();
        let text = "{\n  \"kind\": \"lie\",\n  \"p\": 0,\n  \"dim\": 3,\n  \"basis\": [\"x\", \"y\", \"z\"],\n  \"structure\": [\n    [0, 1, 2, \"-1/2\"],\n    [1, 0, 2, \"1/2\"]\n  ]\n}\n";
        let back = from_json(text).unwrap();
        assert_eq!(back.algebra.field(), q);
        assert_eq!(to_json(&back.algebra, None), text);
        let _ = heisenberg(q).unwrap();
    }

    #[test]
    fn invalid_files_are_rejected() {
        assert!(from_json("{}").is_err());
        let bad = "{\"kind\": \"lie\", \"p\": 5, \"dim\": 2, \"basis\": [\"a\", \"b\"], \"structure\": [[0, 1, 0, \"1\"]]}";
        assert!(matches!(from_json(bad), Err(Error::InvalidPresentation(_))));
    }
}
