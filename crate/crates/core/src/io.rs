//! JSON input: `{"vertices": …, "facets": […], "colouring": […]}`.
//!
//! Each vertex list may be an array of labels or, when every label is one
//! character, a single string such as `"abc"`. A missing colouring means
//! the singleton colouring in vertex order.

use serde::{Deserialize, Serialize};

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::simplicial::{bits, SimplicialComplex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Tokens {
    List(Vec<String>),
    Word(String),
}

impl Tokens {
    pub fn labels(&self) -> Vec<String> {
        match self {
            Tokens::List(v) => v.clone(),
            Tokens::Word(s) if s == "∅" => Vec::new(),
            Tokens::Word(s) => s.chars().map(String::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceJson {
    pub vertices: Tokens,
    pub facets: Vec<Tokens>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colouring: Option<Vec<Tokens>>,
}

/// A complex with a colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub complex: SimplicialComplex,
    pub colouring: Colouring,
}

impl Instance {
    pub fn from_json(j: &InstanceJson, allow_empty_classes: bool) -> Result<Self> {
        let complex = SimplicialComplex::from_facets(
            j.vertices.labels(),
            j.facets.iter().map(|f| f.labels()).collect::<Vec<_>>(),
        )?;
        let colouring = match &j.colouring {
            None => Colouring::singleton(complex.n()),
            Some(cls) => Colouring::from_labels(
                &complex,
                cls.iter().map(|c| c.labels()).collect::<Vec<_>>(),
                allow_empty_classes,
            )?,
        };
        Ok(Instance { complex, colouring })
    }

    pub fn parse(text: &str, allow_empty_classes: bool) -> Result<Self> {
        let j: InstanceJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json(&j, allow_empty_classes)
    }

    pub fn to_json(&self) -> InstanceJson {
        let labels = self.complex.labels();
        let set = |mask: u64| Tokens::List(bits(mask).map(|v| labels[v].clone()).collect());
        InstanceJson {
            vertices: Tokens::List(labels.to_vec()),
            facets: self.complex.facets().iter().map(|&f| set(f)).collect(),
            colouring: Some(
                self.colouring
                    .classes()
                    .iter()
                    .map(|c| Tokens::List(c.iter().map(|&v| labels[v].clone()).collect()))
                    .collect(),
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand() {
        let t = r#"{"vertices":"abcdef","facets":["abc","bcd","ce","de","df"],
                    "colouring":["da","be","cf"]}"#;
        let i = Instance::parse(t, false).unwrap();
        assert_eq!(i.complex.face_count(), 17);
        assert_eq!(i.colouring.k(), 3);
        let back = serde_json::to_string(&i.to_json()).unwrap();
        assert_eq!(Instance::parse(&back, false).unwrap(), i);
    }

    #[test]
    fn lists_and_default_colouring() {
        let t = r#"{"vertices":["v1","v2"],"facets":[["v1"],["v2"]]}"#;
        let i = Instance::parse(t, false).unwrap();
        assert_eq!(i.colouring, Colouring::singleton(2));
    }

    #[test]
    fn empty_complex() {
        let i = Instance::parse(r#"{"vertices":[],"facets":[[]],"colouring":[]}"#, false).unwrap();
        assert_eq!(i.complex.f_vector().unwrap().entries, vec![1]);
    }

    #[test]
    fn errors() {
        assert!(matches!(Instance::parse("{", false), Err(Error::Parse(_))));
        assert!(matches!(
            Instance::parse(r#"{"vertices":"ab","facets":["az"]}"#, false),
            Err(Error::UnknownVertex(_))
        ));
        assert!(Instance::parse(r#"{"vertices":"ab","facets":["ab"],"colouring":["a"]}"#, false)
            .is_err());
    }
}
