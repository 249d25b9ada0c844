//! JSON and CSV documents for atom tables and factorizations.

use powmon_core::{
    is_nr, AtomTable, FactorClass, GroundKind, GroundMonoid, LengthSet, MinimalFactorizations, Subset, Variant,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("schema version {found} is not supported (expected {SCHEMA_VERSION})")]
    Schema { found: u32 },
    #[error("document describes {found}, expected {expected}")]
    Mismatch { found: String, expected: String },
    #[error("bad subset `{text}`: {msg}")]
    Subset { text: String, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundDoc {
    pub kind: String,
    pub n: usize,
}

impl GroundDoc {
    pub fn of(kind: GroundKind) -> Self {
        let (kind, n) = match kind {
            GroundKind::Cyclic(n) => ("cyclic", n),
            GroundKind::NaturalSegment(cap) => ("natural", cap),
            GroundKind::Table(n) => ("table", n),
        };
        GroundDoc { kind: kind.to_string(), n }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomTableDoc {
    pub schema_version: u32,
    pub ground: GroundDoc,
    pub variant: String,
    pub atoms: Vec<String>,
}

pub fn atom_table_doc(g: &GroundMonoid, table: &AtomTable) -> AtomTableDoc {
    AtomTableDoc {
        schema_version: SCHEMA_VERSION,
        ground: GroundDoc::of(table.ground),
        variant: table.variant.name().to_string(),
        atoms: table.atoms.iter().map(|&a| g.format_subset(a)).collect(),
    }
}

pub fn atom_table_json(g: &GroundMonoid, table: &AtomTable) -> String {
    let mut s = serde_json::to_string_pretty(&atom_table_doc(g, table)).expect("plain data serializes");
    s.push('\n');
    s
}

fn parse_strict(g: &GroundMonoid, text: &str) -> Result<Subset, ExportError> {
    let err = |msg: String| ExportError::Subset {
        text: text.to_string(),
        msg,
    };
    let parsed = g.parse_subset(text).map_err(|e| err(e.to_string()))?;
    if parsed.reduced {
        return Err(err("residue out of range".into()));
    }
    Ok(parsed.set)
}

/// Reads an atom table back, checking that it belongs to `g` and `variant`.
pub fn parse_atom_table(g: &GroundMonoid, variant: Variant, json: &str) -> Result<AtomTable, ExportError> {
    let doc: AtomTableDoc = serde_json::from_str(json)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(ExportError::Schema {
            found: doc.schema_version,
        });
    }
    let want = GroundDoc::of(g.kind());
    if doc.ground != want || doc.variant != variant.name() {
        return Err(ExportError::Mismatch {
            found: format!("{} {} {}", doc.ground.kind, doc.ground.n, doc.variant),
            expected: format!("{} {} {}", want.kind, want.n, variant.name()),
        });
    }
    let atoms = doc
        .atoms
        .iter()
        .map(|t| parse_strict(g, t))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AtomTable {
        ground: g.kind(),
        variant,
        atoms,
    })
}

pub fn atom_table_csv(g: &GroundMonoid, table: &AtomTable) -> String {
    let mut out = String::from("atom,size\n");
    for &a in &table.atoms {
        out.push_str(&format!("\"{}\",{}\n", g.format_subset(a), a.len()));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LengthSetDoc {
    pub values: Vec<usize>,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bound: Option<usize>,
}

impl From<&LengthSet> for LengthSetDoc {
    fn from(l: &LengthSet) -> Self {
        LengthSetDoc {
            values: l.to_vec(),
            truncated: l.truncated_at.is_some(),
            bound: l.truncated_at,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub atoms: Vec<String>,
    pub length: usize,
    /// Only reported over cyclic grounds.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub nr: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorDoc {
    pub schema_version: u32,
    pub ground: GroundDoc,
    pub variant: String,
    pub set: String,
    pub unit: bool,
    pub classes: Vec<ClassDoc>,
    pub minimal_lengths: LengthSetDoc,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lengths: Option<LengthSetDoc>,
}

fn class_doc(g: &GroundMonoid, variant: Variant, class: &FactorClass) -> ClassDoc {
    let nr = if g.modulus().is_some() && !class.is_empty() {
        is_nr(g, &class.to_word(g, variant)).ok()
    } else {
        None
    };
    ClassDoc {
        atoms: class.atoms().iter().map(|&a| g.format_subset(a)).collect(),
        length: class.len(),
        nr,
    }
}

pub fn factor_doc(
    g: &GroundMonoid,
    variant: Variant,
    m: &MinimalFactorizations,
    lengths: Option<&LengthSet>,
) -> FactorDoc {
    FactorDoc {
        schema_version: SCHEMA_VERSION,
        ground: GroundDoc::of(g.kind()),
        variant: variant.name().to_string(),
        set: g.format_subset(m.target),
        unit: m.unit,
        classes: m.classes.iter().map(|c| class_doc(g, variant, c)).collect(),
        minimal_lengths: LengthSetDoc::from(&m.lengths()),
        lengths: lengths.map(LengthSetDoc::from),
    }
}

pub fn factor_json(doc: &FactorDoc) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("plain data serializes");
    s.push('\n');
    s
}

/// One class per row, atoms joined by `+`.
pub fn factor_csv(doc: &FactorDoc) -> String {
    let mut out = String::from("class,length,nr\n");
    for c in &doc.classes {
        let nr = c.nr.map(|b| b.to_string()).unwrap_or_default();
        out.push_str(&format!("\"{}\",{},{}\n", c.atoms.join("+"), c.length, nr));
    }
    out
}

pub fn format_lengths(values: &[usize]) -> String {
    let parts: Vec<String> = values.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn factor_text(doc: &FactorDoc) -> String {
    let mut out = format!("X = {} ({} power monoid)\n", doc.set, doc.variant);
    if doc.unit {
        out.push_str("unit: the empty word is its only factorization\n");
    }
    for c in doc.classes.iter().filter(|c| c.length > 0) {
        let tag = if c.nr == Some(true) { "  [NR]" } else { "" };
        out.push_str(&format!("  {}{}\n", c.atoms.join(" * "), tag));
    }
    out.push_str(&format!("minimal lengths: {}\n", format_lengths(&doc.minimal_lengths.values)));
    if let Some(l) = &doc.lengths {
        let cut = l.bound.map(|b| format!(" (searched up to {b})")).unwrap_or_default();
        out.push_str(&format!("lengths: {}{}\n", format_lengths(&l.values), cut));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use powmon_core::{atom_census, minimal_factorizations};

    #[test]
    fn atom_table_round_trips() {
        let g = GroundMonoid::cyclic(7).unwrap();
        let t = atom_census(&g, Variant::Reduced, 18).unwrap();
        let json = atom_table_json(&g, &t);
        assert!(json.contains("\"schema_version\": 1"));
        assert_eq!(parse_atom_table(&g, Variant::Reduced, &json).unwrap(), t);
        assert!(matches!(
            parse_atom_table(&g, Variant::Restricted, &json),
            Err(ExportError::Mismatch { .. })
        ));
        let other = GroundMonoid::cyclic(5).unwrap();
        assert!(parse_atom_table(&other, Variant::Reduced, &json).is_err());
    }

    #[test]
    fn factor_csv_joins_atoms() {
        let g = GroundMonoid::cyclic(3).unwrap();
        let x = Subset::prefix(3);
        let m = minimal_factorizations(&g, x, Variant::Reduced).unwrap();
        let doc = factor_doc(&g, Variant::Reduced, &m, None);
        let csv = factor_csv(&doc);
        assert_eq!(
            csv,
            "class,length,nr\n\"{0,1}+{0,1}\",2,true\n\"{0,1}+{0,2}\",2,false\n\"{0,2}+{0,2}\",2,false\n"
        );
        assert_eq!(doc.minimal_lengths.values, [2]);
    }
}
