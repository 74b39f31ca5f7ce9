//! JSON space descriptions and result files, plus the fixed-width table view.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::charring::{FBCharacter, Partition, SymFunc};
use crate::conf::SpaceCohomology;
use crate::error::{Error, Result};
use crate::stability::{StabilityReport, Window};

pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassEntry {
    pub c: i64,
    pub w: i64,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub dimension: usize,
    #[serde(default)]
    pub irreducible: bool,
    #[serde(default)]
    pub trivial_multiplication: bool,
    #[serde(default)]
    pub top_triv: usize,
    #[serde(default)]
    pub cohomology_gap_s: usize,
    pub classes: Vec<ClassEntry>,
}

impl SpaceFile {
    /// Parses and validates; the second component lists warnings about merged duplicates.
    pub fn parse(text: &str) -> Result<(SpaceCohomology, Vec<String>)> {
        let file: SpaceFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("space file: {e}")))?;
        file.to_space()
    }

    pub fn to_space(&self) -> Result<(SpaceCohomology, Vec<String>)> {
        let mut seen: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for class in &self.classes {
            *seen.entry((class.c, class.w)).or_insert(0) += 1;
        }
        let warnings = seen
            .iter()
            .filter(|(_, &count)| count > 1)
            .map(|((c, w), count)| format!("merged {count} entries at (c,w)=({c},{w}) by summing dim"))
            .collect();
        let space = SpaceCohomology::new(self.dimension, self.classes.iter().map(|e| (e.c, e.w, e.dim)))?
            .with_flags(
                self.irreducible,
                self.trivial_multiplication,
                self.top_triv,
                self.cohomology_gap_s,
            )?;
        Ok((space, warnings))
    }

    pub fn from_space(space: &SpaceCohomology) -> SpaceFile {
        SpaceFile {
            dimension: space.d,
            irreducible: space.irreducible,
            trivial_multiplication: space.trivial_multiplication,
            top_triv: space.top_triv,
            cohomology_gap_s: space.gap_s,
            classes: space
                .classes()
                .iter()
                .map(|(&(c, w), &dim)| ClassEntry { c, w, dim })
                .collect(),
        }
    }
}

/// Schur expansion keyed by `"[λ1,λ2,…]"`, kept in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SchurMap(pub Vec<(Partition, i64)>);

impl Serialize for SchurMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (lambda, coeff) in &self.0 {
            map.serialize_entry(&lambda.to_string(), coeff)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for SchurMap {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct SchurVisitor;
        impl<'de> Visitor<'de> for SchurVisitor {
            type Value = SchurMap;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from partitions \"[a,b,…]\" to integers")
            }
            fn visit_map<M: MapAccess<'de>>(self, mut access: M) -> std::result::Result<SchurMap, M::Error> {
                let mut entries = Vec::new();
                while let Some((key, value)) = access.next_entry::<String, i64>()? {
                    let lambda = Partition::parse(&key)
                        .ok_or_else(|| serde::de::Error::custom(format!("bad partition key {key:?}")))?;
                    entries.push((lambda, value));
                }
                Ok(SchurMap(entries))
            }
        }
        deserializer.deserialize_map(SchurVisitor)
    }
}

impl SchurMap {
    pub fn from_symfunc(f: &SymFunc) -> Result<Self> {
        let mut entries = Vec::new();
        for (lambda, coeff) in f.schur() {
            if !coeff.is_integer() {
                return Err(Error::Calibration(format!("non-integral Schur coefficient {coeff} at {lambda}")));
            }
            let value = i64::try_from(coeff.to_integer())
                .map_err(|_| Error::Calibration(format!("Schur coefficient at {lambda} overflows i64")))?;
            entries.push((lambda, value));
        }
        Ok(SchurMap(entries))
    }

    pub fn to_symfunc(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (lambda, coeff) in &self.0 {
            out += &SymFunc::s(lambda).scale(&BigRational::from_integer(BigInt::from(*coeff)));
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceEntry {
    pub c: i64,
    pub w: i64,
    pub schur: SchurMap,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradedEntry {
    pub k: usize,
    pub pieces: Vec<PieceEntry>,
}

pub fn character_entries(f: &FBCharacter) -> Result<Vec<GradedEntry>> {
    let mut out: Vec<GradedEntry> = Vec::new();
    for (d, g) in f.pieces() {
        let piece = PieceEntry {
            c: d.c,
            w: d.w,
            schur: SchurMap::from_symfunc(g)?,
        };
        match out.last_mut() {
            Some(entry) if entry.k == d.k => entry.pieces.push(piece),
            _ => out.push(GradedEntry {
                k: d.k,
                pieces: vec![piece],
            }),
        }
    }
    Ok(out)
}

pub fn entries_character(entries: &[GradedEntry], max_degree: usize) -> Result<FBCharacter> {
    let mut out = FBCharacter::empty(max_degree);
    for entry in entries {
        for piece in &entry.pieces {
            let f = piece.schur.to_symfunc();
            if f.degrees().iter().any(|&k| k != entry.k) {
                return Err(Error::Parse(format!("piece at k={} is not of degree k", entry.k)));
            }
            out.add_piece(entry.k, piece.c, piece.w, &f);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Meta {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub engine_version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WindowEntry {
    /// Cohomological degree for generator windows, graded degree for support windows.
    pub at: i64,
    pub lo: i64,
    pub hi: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SplitEntry {
    pub operator: Vec<GradedEntry>,
    pub quotient: Vec<GradedEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportEntry {
    pub mode: String,
    pub parameters: BTreeMap<String, Value>,
    /// Exact fraction `"p/q"`.
    pub b: String,
    pub vanishing: String,
    pub generator_windows: Vec<WindowEntry>,
    pub support_windows: Vec<WindowEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub acting_algebra: Option<String>,
    pub statements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResultFile {
    pub meta: Meta,
    pub graded: Vec<GradedEntry>,
    /// The renormalized character, for commands that produce one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub renormalized: Option<Vec<GradedEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ReportEntry>,
}

impl ResultFile {
    pub fn new(command: &str, parameters: BTreeMap<String, Value>) -> Self {
        ResultFile {
            meta: Meta {
                command: command.into(),
                parameters,
                engine_version: ENGINE_VERSION.into(),
            },
            graded: Vec::new(),
            renormalized: None,
            report: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("result files always serialize");
        text.push('\n');
        text
    }

    pub fn parse(text: &str) -> Result<ResultFile> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("result file: {e}")))
    }
}

pub fn format_rational(x: &BigRational) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn window_entries<K: Copy + Into<i64>>(windows: &BTreeMap<K, Window>) -> Vec<WindowEntry> {
    windows
        .iter()
        .map(|(&at, w)| WindowEntry {
            at: at.into(),
            lo: w.lo,
            hi: w.hi,
        })
        .collect()
}

pub fn report_entry(report: &StabilityReport) -> Result<ReportEntry> {
    let mut parameters = BTreeMap::new();
    parameters.insert("n".into(), Value::from(report.n));
    parameters.insert("d".into(), Value::from(report.d));
    parameters.insert("max_degree".into(), Value::from(report.max_degree));
    if let Some(c0) = report.c0 {
        parameters.insert("c0".into(), Value::from(c0));
    }
    if let Some(m) = report.m {
        parameters.insert("m".into(), Value::from(m));
    }
    if report.mode == crate::stability::Mode::TopTriv {
        let s = report.s.map(Value::from).unwrap_or_else(|| Value::from("unbounded"));
        parameters.insert("s".into(), s);
    }
    if let Some(i) = report.i {
        parameters.insert("i".into(), Value::from(i));
    }
    let support: BTreeMap<i64, Window> = report
        .support_windows
        .iter()
        .map(|(&k, &w)| (k as i64, w))
        .collect();
    let split = match &report.split {
        Some(s) => Some(SplitEntry {
            operator: character_entries(&s.operator)?,
            quotient: character_entries(&s.quotient)?,
        }),
        None => None,
    };
    Ok(ReportEntry {
        mode: report.mode.name().into(),
        parameters,
        b: format_rational(&report.b),
        vanishing: report.vanishing.clone(),
        generator_windows: window_entries(&report.generator_windows),
        support_windows: window_entries(&support),
        acting_algebra: report.acting_algebra.clone(),
        statements: report.statements.clone(),
        split,
    })
}

/// Fixed-width table with one row per `(k, c, w)` piece.
pub fn character_table(f: &FBCharacter) -> String {
    let header = ["k", "c", "w", "schur", "dim"].map(String::from);
    let rows: Vec<[String; 5]> = f
        .pieces()
        .map(|(d, g)| {
            [
                d.k.to_string(),
                d.c.to_string(),
                d.w.to_string(),
                g.schur_string(),
                g.dimension().to_string(),
            ]
        })
        .collect();
    let mut widths = header.clone().map(|h| h.chars().count());
    for row in &rows {
        for (width, cell) in widths.iter_mut().zip(row) {
            *width = (*width).max(cell.chars().count());
        }
    }
    let render = |row: &[String; 5]| -> String {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (cell, &width))| {
                let pad = width - cell.chars().count();
                if i == 3 {
                    format!("{cell}{}", " ".repeat(pad))
                } else {
                    format!("{}{cell}", " ".repeat(pad))
                }
            })
            .collect();
        cells.join("  ").trim_end().to_string()
    };
    let mut out = render(&header);
    out.push('\n');
    for row in &rows {
        out.push_str(&render(row));
        out.push('\n');
    }
    out
}

pub fn report_text(report: &StabilityReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("mode: {}\n", report.mode));
    out.push_str(&format!("n = {}, d = {}", report.n, report.d));
    if let Some(c0) = report.c0 {
        out.push_str(&format!(", c0 = {c0}"));
    }
    if let Some(m) = report.m {
        out.push_str(&format!(", m = {m}"));
    }
    if report.mode == crate::stability::Mode::TopTriv {
        match report.s {
            Some(s) => out.push_str(&format!(", s = {s}")),
            None => out.push_str(", s = unbounded"),
        }
    }
    if let Some(i) = report.i {
        out.push_str(&format!(", i = {i}"));
    }
    out.push('\n');
    out.push_str(&format!("b = {}\n", format_rational(&report.b)));
    out.push_str(&format!("vanishing: {}\n", report.vanishing));
    if let Some(a) = &report.acting_algebra {
        out.push_str(&format!("acting algebra: {a}\n"));
    }
    for (i, w) in &report.generator_windows {
        out.push_str(&format!("generator window for H^{i}: k ∈ {w}\n"));
    }
    for (k, w) in &report.support_windows {
        out.push_str(&format!("support window at k = {k}: c ∈ {w}\n"));
    }
    for s in &report.statements {
        out.push_str(&format!("{s}\n"));
    }
    if let Some(split) = &report.split {
        out.push_str("operator character O:\n");
        out.push_str(&character_table(&split.operator));
        out.push_str("quotient character G:\n");
        out.push_str(&character_table(&split.quotient));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conf;
    use crate::stability;

    #[test]
    fn space_file_round_trip_and_merging() {
        let text = r#"{"dimension": 1, "irreducible": true, "trivial_multiplication": true,
            "top_triv": 0, "cohomology_gap_s": 0,
            "classes": [{"c": 0, "w": 0, "dim": 1}, {"c": 1, "w": 1, "dim": 1}, {"c": 1, "w": 1, "dim": 2}]}"#;
        let (space, warnings) = SpaceFile::parse(text).unwrap();
        assert_eq!(warnings.len(), 1);
        assert_eq!(space.classes()[&(1, 1)], 3);
        let again = serde_json::to_string(&SpaceFile::from_space(&space)).unwrap();
        assert_eq!(SpaceFile::parse(&again).unwrap().0, space);
    }

    #[test]
    fn space_file_rejections() {
        assert!(matches!(SpaceFile::parse("{"), Err(Error::Parse(_))));
        let unknown = r#"{"dimension": 1, "classes": [], "colour": 3}"#;
        assert!(matches!(SpaceFile::parse(unknown), Err(Error::Parse(_))));
        let negative = r#"{"dimension": 1, "classes": [{"c": -1, "w": 0, "dim": 1}]}"#;
        assert!(SpaceFile::parse(negative).is_err());
    }

    #[test]
    fn result_file_round_trip() {
        let cc = conf::conf_cohomology(&SpaceCohomology::affine(1), 2, 3, true).unwrap();
        let mut file = ResultFile::new("conf", BTreeMap::from([("n".to_string(), Value::from(2))]));
        file.graded = character_entries(&cc.character).unwrap();
        let report = stability::toptriv_split(&SpaceCohomology::affine(1), 1, 3).unwrap();
        file.report = Some(report_entry(&report).unwrap());
        let text = file.to_json();
        let parsed = ResultFile::parse(&text).unwrap();
        assert_eq!(parsed, file);
        assert_eq!(parsed.to_json(), text);
        assert_eq!(entries_character(&parsed.graded, 3).unwrap(), cc.character);
        assert!(text.contains("\"[2]\": 1"));
        assert!(text.contains("\"b\": \"1/2\""));
    }

    #[test]
    fn schur_keys_follow_partition_order() {
        let f = &SymFunc::h(1) * &SymFunc::h(2);
        let text = serde_json::to_string(&SchurMap::from_symfunc(&f).unwrap()).unwrap();
        assert_eq!(text, r#"{"[3]":1,"[2,1]":1}"#);
    }

    #[test]
    fn table_rows() {
        let cc = conf::conf_cohomology(&SpaceCohomology::affine(1), 2, 2, false).unwrap();
        let table = character_table(&cc.character);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[2].starts_with("2  0  0  s[2]"));
        assert!(lines[3].starts_with("2  1  1  s[2]"));
    }
}
