use serde::{Deserialize, Serialize};

use super::{AlComponent, ConeSpec, PolyCone};
use crate::error::{ConeError, ParseError};
use crate::rational::QVector;

/// Wire form of a cone.
///
/// Input needs `dim` and one of `generators`, `halfspaces` or `al`. Output of
/// a canonical cone lists both representations as integer vectors.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct ConeJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<QVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<QVector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub al: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lineality_dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solid: Option<bool>,
}

impl ConeJson {
    pub fn to_cone(&self) -> Result<PolyCone, ConeError> {
        let spec = if let Some(g) = &self.generators {
            ConeSpec::Generators(g.clone())
        } else if let Some(h) = &self.halfspaces {
            ConeSpec::Halfspaces(h.clone())
        } else if let Some(al) = &self.al {
            ConeSpec::AlSignature(
                al.iter()
                    .map(|s| AlComponent::parse(s))
                    .collect::<Result<_, _>>()?,
            )
        } else {
            return Err(ConeError::NoRepresentation);
        };
        let cone = PolyCone::new(self.dim, &spec)?;
        // when both lists are given they must describe the same set
        if let (Some(_), Some(h)) = (&self.generators, &self.halfspaces) {
            let other = PolyCone::new(self.dim, &ConeSpec::Halfspaces(h.clone()))?;
            if !cone.same_set(&other)? {
                return Err(ConeError::Precondition(
                    "generators and halfspaces describe different cones".into(),
                ));
            }
        }
        Ok(cone)
    }

    pub fn from_cone(c: &PolyCone) -> Self {
        ConeJson {
            dim: c.dim(),
            generators: Some(c.generators().iter().map(|v| QVector::from_int_vec(v)).collect()),
            halfspaces: Some(
                c.halfspace_normals()
                    .iter()
                    .map(|v| QVector::from_int_vec(v))
                    .collect(),
            ),
            al: None,
            lineality_dim: Some(c.lineality_dim()),
            solid: Some(c.is_solid()),
        }
    }
}

impl Serialize for PolyCone {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ConeJson::from_cone(self).serialize(s)
    }
}

impl PolyCone {
    pub fn from_json_str(s: &str) -> Result<PolyCone, crate::error::Error> {
        let j: ConeJson = serde_json::from_str(s).map_err(ParseError::from)?;
        Ok(j.to_cone()?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ConeJson::from_cone(self)).expect("cone json")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rational_generators() {
        let c = PolyCone::from_json_str(r#"{"dim": 2, "generators": [["1/2", 0], [0, "3"]]}"#)
            .unwrap();
        assert_eq!(c, PolyCone::cone(2, &[&[1, 0], &[0, 1]]));
        let h = PolyCone::from_json_str(r#"{"dim": 2, "halfspaces": [[0, 1]]}"#).unwrap();
        assert_eq!(h.lineality_dim(), 1);
        let al = PolyCone::from_json_str(r#"{"dim": 2, "al": ["R+", "R-"]}"#).unwrap();
        assert_eq!(al, PolyCone::cone(2, &[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn emitted_json_lists_both_representations() {
        let c = PolyCone::cone(2, &[&[1, 0], &[0, 1]]);
        let v = c.to_json();
        assert_eq!(v["generators"].as_array().unwrap().len(), 2);
        assert_eq!(v["halfspaces"].as_array().unwrap().len(), 2);
        let back = PolyCone::from_json_str(&v.to_string()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn inconsistent_representations_rejected() {
        let r = PolyCone::from_json_str(
            r#"{"dim": 2, "generators": [[1, 0]], "halfspaces": [[0, 1]]}"#,
        );
        assert!(r.is_err());
        assert!(PolyCone::from_json_str(r#"{"dim": 2}"#).is_err());
    }
}
