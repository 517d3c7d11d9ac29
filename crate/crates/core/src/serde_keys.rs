//! Maps keyed by degree, written as JSON objects with decimal string keys.
//!
//! serde_json handles integer keys directly, but not once the map sits
//! inside an internally tagged enum, where values are buffered first.

use std::collections::BTreeMap;

use serde::de::Error;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub fn serialize<S: Serializer>(map: &BTreeMap<u64, u64>, s: S) -> Result<S::Ok, S::Error> {
    map.serialize(s)
}

pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<u64, u64>, D::Error> {
    BTreeMap::<String, u64>::deserialize(d)?
        .into_iter()
        .map(|(k, v)| k.parse().map(|k| (k, v)).map_err(|_| D::Error::custom(format!("degree key {k:?}"))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug, PartialEq, Serialize, Deserialize)]
    #[serde(tag = "kind")]
    enum Tagged {
        Wrap {
            #[serde(with = "super")]
            m: BTreeMap<u64, u64>,
        },
    }

    #[test]
    fn round_trips_inside_a_tagged_enum() {
        let t = Tagged::Wrap { m: BTreeMap::from([(2, 5), (10, 1)]) };
        let s = serde_json::to_string(&t).unwrap();
        assert_eq!(s, r#"{"kind":"Wrap","m":{"2":5,"10":1}}"#);
        assert_eq!(serde_json::from_str::<Tagged>(&s).unwrap(), t);
        assert!(serde_json::from_str::<Tagged>(r#"{"kind":"Wrap","m":{"x":1}}"#).is_err());
    }
}
