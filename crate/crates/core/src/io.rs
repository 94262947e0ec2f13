//! Instance file formats.
//!
//! Point sets are JSON (`{"points": [{"x": "1/2", "y": "3", "color": 0}]}`)
//! or CSV (header `x,y,color`). Gap instances are either two lines of
//! whitespace-separated numbers or `{"xs": [...], "ys": [...]}`. Numbers are
//! exact: integers, decimals or `p/q`. JSON writes them as strings.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::coord::Coordinate;
use crate::geom::{ColorId, ColoredPoint, Cross, Point, PointSet, Quadrant};
use crate::reductions::CougInstance;

/// A malformed input, with a 1-based position where one is known.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl From<serde_json::Error> for ParseError {
    fn from(e: serde_json::Error) -> Self {
        ParseError::new(e.line(), e.column(), e.to_string())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    /// Picks the format from a file extension, defaulting to JSON.
    pub fn from_path(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some(ext) if ext.eq_ignore_ascii_case("csv") => Format::Csv,
            _ => Format::Json,
        }
    }

    /// Sniffs the format from content: JSON starts with `{`.
    pub fn sniff(bytes: &[u8]) -> Format {
        match bytes.iter().find(|b| !b.is_ascii_whitespace()) {
            Some(b'{') => Format::Json,
            _ => Format::Csv,
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonPoint {
    x: Coordinate,
    y: Coordinate,
    color: u32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonInstance {
    points: Vec<JsonPoint>,
}

pub fn parse_instance(bytes: &[u8], format: Format) -> Result<PointSet, ParseError> {
    match format {
        Format::Json => parse_json(bytes),
        Format::Csv => parse_csv(bytes),
    }
}

fn parse_json(bytes: &[u8]) -> Result<PointSet, ParseError> {
    let inst: JsonInstance = serde_json::from_slice(bytes)?;
    Ok(inst
        .points
        .into_iter()
        .map(|p| ColoredPoint {
            x: p.x,
            y: p.y,
            color: ColorId(p.color),
        })
        .collect())
}

fn parse_csv(bytes: &[u8]) -> Result<PointSet, ParseError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(bytes);
    let csv_err = |e: csv::Error| {
        let line = e.position().map_or(0, |p| p.line() as usize);
        ParseError::new(line, 0, e.to_string())
    };
    let headers = reader.headers().map_err(csv_err)?.clone();
    if headers.iter().collect::<Vec<_>>() != ["x", "y", "color"] {
        return Err(ParseError::new(
            1,
            1,
            format!(
                "expected header \"x,y,color\", found {:?}",
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }
    let mut points = Vec::new();
    for record in reader.records() {
        let record = record.map_err(csv_err)?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let x = record[0]
            .parse::<Coordinate>()
            .map_err(|e| ParseError::new(line, 1, e.to_string()))?;
        let y = record[1]
            .parse::<Coordinate>()
            .map_err(|e| ParseError::new(line, 2, e.to_string()))?;
        let color = record[2].parse::<u32>().map_err(|_| {
            ParseError::new(
                line,
                3,
                format!(
                    "color must be a non-negative integer, found {:?}",
                    &record[2]
                ),
            )
        })?;
        points.push(ColoredPoint {
            x,
            y,
            color: ColorId(color),
        });
    }
    Ok(PointSet::new(points))
}

pub fn serialize_instance(set: &PointSet, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let inst = JsonInstance {
                points: set
                    .points()
                    .iter()
                    .map(|p| JsonPoint {
                        x: p.x.clone(),
                        y: p.y.clone(),
                        color: p.color.0,
                    })
                    .collect(),
            };
            let mut out = serde_json::to_vec_pretty(&inst).expect("serializable");
            out.push(b'\n');
            out
        }
        Format::Csv => {
            let mut out = String::from("x,y,color\n");
            for p in set.points() {
                out.push_str(&format!("{},{},{}\n", p.x, p.y, p.color));
            }
            out.into_bytes()
        }
    }
}

/// Reads a gap instance in either the two-line text form or JSON.
pub fn parse_coug(bytes: &[u8]) -> Result<CougInstance, ParseError> {
    let inst = if Format::sniff(bytes) == Format::Json {
        serde_json::from_slice::<CougInstance>(bytes)?
    } else {
        parse_coug_text(bytes)?
    };
    inst.validate()
        .map_err(|e| ParseError::new(0, 0, e.to_string()))?;
    Ok(inst)
}

fn parse_coug_text(bytes: &[u8]) -> Result<CougInstance, ParseError> {
    let text = std::str::from_utf8(bytes).map_err(|e| ParseError::new(0, 0, e.to_string()))?;
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let mut row = Vec::new();
        for (j, tok) in line.split_whitespace().enumerate() {
            row.push(
                tok.parse::<Coordinate>()
                    .map_err(|e| ParseError::new(i + 1, j + 1, e.to_string()))?,
            );
        }
        rows.push((i + 1, row));
    }
    match <[_; 2]>::try_from(rows) {
        Ok([(_, xs), (_, ys)]) => Ok(CougInstance { xs, ys }),
        Err(rows) => {
            let line = rows.get(2).map_or(0, |r| r.0);
            Err(ParseError::new(
                line,
                1,
                format!("expected 2 non-empty lines, found {}", rows.len()),
            ))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CougFormat {
    Text,
    Json,
}

pub fn serialize_coug(inst: &CougInstance, format: CougFormat) -> Vec<u8> {
    match format {
        CougFormat::Json => {
            let mut out = serde_json::to_vec(inst).expect("serializable");
            out.push(b'\n');
            out
        }
        CougFormat::Text => {
            let join = |v: &[Coordinate]| {
                v.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            format!("{}\n{}\n", join(&inst.xs), join(&inst.ys)).into_bytes()
        }
    }
}

/// `{"center": {"x", "y"}, "witnesses": [{"x", "y", "color", "quadrant"}]}`
pub fn cross_to_json(cross: &Cross) -> serde_json::Value {
    let witnesses: Vec<_> = Quadrant::ALL
        .iter()
        .zip(&cross.witnesses)
        .map(|(q, w)| {
            json!({
                "x": w.x.to_string(),
                "y": w.y.to_string(),
                "color": w.color.0,
                "quadrant": q.label(),
            })
        })
        .collect();
    json!({
        "center": {"x": cross.center.x.to_string(), "y": cross.center.y.to_string()},
        "witnesses": witnesses,
    })
}

#[derive(Deserialize)]
struct JsonCross {
    center: Point,
    witnesses: Vec<JsonWitness>,
}

#[derive(Deserialize)]
struct JsonWitness {
    x: Coordinate,
    y: Coordinate,
    color: u32,
    quadrant: Quadrant,
}

/// Inverse of [`cross_to_json`]. Witnesses may appear in any order.
pub fn cross_from_json(bytes: &[u8]) -> Result<Cross, ParseError> {
    let raw: JsonCross = serde_json::from_slice(bytes)?;
    let mut slots: [Option<ColoredPoint>; 4] = Default::default();
    for w in raw.witnesses {
        let slot = &mut slots[w.quadrant.index()];
        if slot.is_some() {
            return Err(ParseError::new(
                0,
                0,
                format!("duplicate witness for {}", w.quadrant.label()),
            ));
        }
        *slot = Some(ColoredPoint {
            x: w.x,
            y: w.y,
            color: ColorId(w.color),
        });
    }
    let [a, b, c, d] = slots;
    match (a, b, c, d) {
        (Some(a), Some(b), Some(c), Some(d)) => Ok(Cross {
            center: raw.center,
            witnesses: [a, b, c, d],
        }),
        _ => Err(ParseError::new(
            0,
            0,
            "a cross needs one witness per quadrant",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_decimal_is_exact() {
        let set = parse_instance(b"x,y,color\n0.5,1,0\n", Format::Csv).unwrap();
        assert_eq!(
            set.points(),
            &[ColoredPoint {
                x: Coordinate::from_ratio(1, 2),
                y: Coordinate::from_integer(1),
                color: ColorId(0),
            }]
        );
    }

    #[test]
    fn json_rational_is_exact() {
        let set = parse_instance(
            br#"{"points":[{"x":"1/3","y":"-2","color":7}]}"#,
            Format::Json,
        )
        .unwrap();
        assert_eq!(set.points()[0].x, Coordinate::from_ratio(1, 3));
        assert_eq!(set.points()[0].color, ColorId(7));
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_instance(b"x,y,color\n1,2,0\n1,zz,0\n", Format::Csv).unwrap_err();
        assert_eq!((e.line, e.column), (3, 2));
        let e = parse_instance(b"x,y,color\n1,2,-1\n", Format::Csv).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_instance(b"x,y,colour\n", Format::Csv).unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_instance(b"x,y,color\n1,2\n", Format::Csv).unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_instance(b"{\"points\":[\n{\"x\":\"1\",\"y\":\"2\"}]}", Format::Json)
            .unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("color"));
        assert!(parse_instance(
            br#"{"points":[{"x":"1","y":"2","color":-1}]}"#,
            Format::Json
        )
        .is_err());
        assert!(parse_instance(
            br#"{"points":[{"x":"1.x","y":"2","color":1}]}"#,
            Format::Json
        )
        .is_err());
    }

    #[test]
    fn empty_instances() {
        assert!(parse_instance(b"x,y,color\n", Format::Csv)
            .unwrap()
            .is_empty());
        assert!(parse_instance(br#"{"points":[]}"#, Format::Json)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn coug_both_forms() {
        let a = parse_coug(b"0 1/2 3\n\n-1 0.25 7\n").unwrap();
        let b = parse_coug(br#"{"xs":["0","1/2",3],"ys":["-1","1/4","7"]}"#).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            parse_coug(&serialize_coug(&a, CougFormat::Text)).unwrap(),
            a
        );
        assert_eq!(
            parse_coug(&serialize_coug(&a, CougFormat::Json)).unwrap(),
            a
        );
        assert!(parse_coug(b"1 2\n").is_err());
        assert!(parse_coug(b"1 2\n3\n").is_err());
        let e = parse_coug(b"1 2\n3 x\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 2));
        assert_eq!(parse_coug(b"1\n2\n3\n").unwrap_err().line, 3);
    }

    #[test]
    fn cross_json_round_trip() {
        let cross = Cross {
            center: Point::new(0, 0),
            witnesses: [
                ColoredPoint::new(1, 1, 0),
                ColoredPoint::new(-1, 1, 1),
                ColoredPoint::new(-1, -1, 2),
                ColoredPoint::new(1, -1, 3),
            ],
        };
        let text = serde_json::to_vec(&cross_to_json(&cross)).unwrap();
        assert_eq!(cross_from_json(&text).unwrap(), cross);
    }
}
