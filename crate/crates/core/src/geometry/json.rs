//! `{ "d": 2, "boxes": { "0": [["0/1","1/1"], ...], ... } }`, keys in vertex
//! order.

use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AxisBox, BoxRepresentation};
use crate::rational::{format_q, parse_q};

struct Boxes<'a>(&'a [AxisBox]);

impl Serialize for Boxes<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (v, b) in self.0.iter().enumerate() {
            let iv: Vec<[String; 2]> =
                b.intervals().iter().map(|(lo, hi)| [format_q(lo), format_q(hi)]).collect();
            map.serialize_entry(&v.to_string(), &iv)?;
        }
        map.end()
    }
}

impl Serialize for BoxRepresentation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("BoxRepresentation", 2)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("boxes", &Boxes(&self.boxes))?;
        st.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRepresentation {
    d: usize,
    boxes: BTreeMap<String, Vec<[String; 2]>>,
}

impl<'de> Deserialize<'de> for BoxRepresentation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = RawRepresentation::deserialize(d)?;
        let mut indexed: BTreeMap<usize, AxisBox> = BTreeMap::new();
        for (key, intervals) in raw.boxes {
            let v: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("vertex key {key:?} is not an index")))?;
            let iv = intervals
                .iter()
                .map(|[lo, hi]| Ok((parse_q(lo)?, parse_q(hi)?)))
                .collect::<Result<Vec<_>, crate::rational::ParseRationalError>>()
                .map_err(D::Error::custom)?;
            let b = AxisBox::new(iv).map_err(|e| D::Error::custom(format!("box {v}: {e}")))?;
            if indexed.insert(v, b).is_some() {
                return Err(D::Error::custom(format!("vertex {v} listed twice")));
            }
        }
        let n = indexed.len();
        if let Some((&last, _)) = indexed.iter().next_back() {
            if last + 1 != n {
                return Err(D::Error::custom("vertex keys must be exactly 0..n"));
            }
        }
        BoxRepresentation::new(raw.d, indexed.into_values().collect()).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn keys_follow_vertex_order() {
        let boxes = (0..11).map(|i| AxisBox::from_ints(&[(i, i + 1)])).collect();
        let r = BoxRepresentation::new(1, boxes).unwrap();
        let s = serde_json::to_string(&r).unwrap();
        assert!(s.starts_with(r#"{"d":1,"boxes":{"0":[["0/1","1/1"]],"1":"#));
        assert!(s.find(r#""10""#).unwrap() > s.find(r#""9""#).unwrap());
        let back: BoxRepresentation = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn rejects_gaps_and_bad_boxes() {
        let gap = r#"{"d":1,"boxes":{"0":[["0","1"]],"2":[["1","2"]]}}"#;
        assert!(serde_json::from_str::<BoxRepresentation>(gap).is_err());
        let flat = r#"{"d":1,"boxes":{"0":[["1","1"]]}}"#;
        assert!(serde_json::from_str::<BoxRepresentation>(flat).is_err());
        let dim = r#"{"d":2,"boxes":{"0":[["0","1"]]}}"#;
        assert!(serde_json::from_str::<BoxRepresentation>(dim).is_err());
    }
}
