//! JSON formats for matroids, orderings, partitions and S-pairs.
//!
//! A matroid file is `{"n": 7, "r": 3, "hyperplanes": [[0,1,2], ...]}`.
//! Output is compact with each hyperplane ascending and the outer list
//! sorted lexicographically. Input may list hyperplanes in any order; it is
//! canonicalized on load. Repeated elements inside one hyperplane are
//! rejected.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{MatroidError, PavingMatroid};
use crate::ordering::CyclicOrdering;
use crate::partition::IndependentPartition;
use crate::set::{ElementId, ElementSet};
use crate::spair::{SPairError, SPairFamilies};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    SPair(#[from] SPairError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Parse(e.to_string())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatroidJson {
    n: usize,
    r: usize,
    hyperplanes: Vec<Vec<ElementId>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrderJson {
    order: Vec<ElementId>,
}

#[derive(Serialize)]
struct PartitionJson {
    parts: Vec<Vec<ElementId>>,
    small_index: Option<usize>,
}

#[derive(Serialize)]
struct BasisJson {
    basis: Vec<ElementId>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SPairJson {
    n: usize,
    fam1: Vec<Vec<usize>>,
    fam2: Vec<Vec<usize>>,
}

fn read(path: &Path) -> Result<String, IoError> {
    fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn lists(sets: &[ElementSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

fn to_set(list: &[usize]) -> Result<ElementSet, IoError> {
    let mut set = ElementSet::empty();
    for &e in list {
        if e >= crate::set::MAX_ELEMENTS {
            return Err(IoError::Parse(format!("element {e} is too large")));
        }
        if set.contains(e) {
            return Err(IoError::Parse(format!("element {e} repeated in {list:?}")));
        }
        set.insert(e);
    }
    Ok(set)
}

pub fn matroid_to_json(m: &PavingMatroid) -> String {
    let file = MatroidJson {
        n: m.n(),
        r: m.rank_of_matroid(),
        hyperplanes: lists(m.hyperplanes()),
    };
    serde_json::to_string(&file).expect("plain integers serialize")
}

pub fn matroid_from_json(text: &str) -> Result<PavingMatroid, IoError> {
    let file: MatroidJson = serde_json::from_str(text)?;
    for list in &file.hyperplanes {
        to_set(list)?;
    }
    Ok(PavingMatroid::from_lists(
        file.n,
        file.r,
        &file.hyperplanes,
    )?)
}

pub fn load(path: impl AsRef<Path>) -> Result<PavingMatroid, IoError> {
    matroid_from_json(&read(path.as_ref())?)
}

/// Writes the canonical JSON followed by a newline.
pub fn save(m: &PavingMatroid, path: impl AsRef<Path>) -> Result<(), IoError> {
    write(path.as_ref(), &(matroid_to_json(m) + "\n"))
}

pub fn order_to_json(order: &CyclicOrdering) -> String {
    let file = OrderJson {
        order: order.as_slice().to_vec(),
    };
    serde_json::to_string(&file).expect("plain integers serialize")
}

/// Reads `{"order": [...]}` as given; checking it against a matroid is the
/// caller's job.
pub fn order_from_json(text: &str) -> Result<Vec<ElementId>, IoError> {
    let file: OrderJson = serde_json::from_str(text)?;
    Ok(file.order)
}

pub fn load_order(path: impl AsRef<Path>) -> Result<Vec<ElementId>, IoError> {
    order_from_json(&read(path.as_ref())?)
}

pub fn partition_to_json(p: &IndependentPartition) -> String {
    let file = PartitionJson {
        parts: lists(&p.parts),
        small_index: p.small_index,
    };
    serde_json::to_string(&file).expect("plain integers serialize")
}

pub fn basis_to_json(basis: ElementSet) -> String {
    serde_json::to_string(&BasisJson {
        basis: basis.to_vec(),
    })
    .expect("plain integers serialize")
}

pub fn spair_to_json(p: &SPairFamilies) -> String {
    let file = SPairJson {
        n: p.n(),
        fam1: lists(p.fam1.sets()),
        fam2: lists(p.fam2.sets()),
    };
    serde_json::to_string(&file).expect("plain integers serialize")
}

pub fn spair_from_json(text: &str) -> Result<SPairFamilies, IoError> {
    let file: SPairJson = serde_json::from_str(text)?;
    let fam1 = file
        .fam1
        .iter()
        .map(|l| to_set(l))
        .collect::<Result<Vec<_>, _>>()?;
    let fam2 = file
        .fam2
        .iter()
        .map(|l| to_set(l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SPairFamilies::new(file.n, fam1, fam2)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::fano;

    #[test]
    fn fano_text() {
        let text = matroid_to_json(&fano());
        assert_eq!(
            text,
            r#"{"n":7,"r":3,"hyperplanes":[[0,1,2],[0,3,4],[0,5,6],[1,3,5],[1,4,6],[2,3,6],[2,4,5]]}"#
        );
        assert_eq!(matroid_from_json(&text).unwrap(), fano());
    }

    #[test]
    fn loader_canonicalizes_order() {
        let m = matroid_from_json(r#"{"n":5,"r":3,"hyperplanes":[[4,3,2],[0,1,2]]}"#).unwrap();
        assert_eq!(
            matroid_to_json(&m),
            r#"{"n":5,"r":3,"hyperplanes":[[0,1,2],[2,3,4]]}"#
        );
    }

    #[test]
    fn loader_errors() {
        assert!(matches!(matroid_from_json("{"), Err(IoError::Parse(_))));
        assert!(matches!(
            matroid_from_json(r#"{"n":3,"r":2}"#),
            Err(IoError::Parse(_))
        ));
        assert!(matches!(
            matroid_from_json(r#"{"n":3,"r":2,"hyperplanes":[],"x":1}"#),
            Err(IoError::Parse(_))
        ));
        assert!(matches!(
            matroid_from_json(r#"{"n":4,"r":2,"hyperplanes":[[0,0,1]]}"#),
            Err(IoError::Parse(_))
        ));
        assert!(matches!(
            matroid_from_json(r#"{"n":6,"r":3,"hyperplanes":[[0,1,2],[0,1,3]]}"#),
            Err(IoError::Matroid(MatroidError::HyperplaneOverlap { .. }))
        ));
        assert!(matches!(
            matroid_from_json(r#"{"n":3,"r":4,"hyperplanes":[]}"#),
            Err(IoError::Matroid(MatroidError::InvalidRank { .. }))
        ));
        assert!(matches!(
            matroid_from_json(r#"{"n":-1,"r":4,"hyperplanes":[]}"#),
            Err(IoError::Parse(_))
        ));
    }

    #[test]
    fn small_formats() {
        let p = IndependentPartition {
            parts: vec![ElementSet::full(2), ElementSet::singleton(2)],
            small_index: Some(1),
        };
        assert_eq!(
            partition_to_json(&p),
            r#"{"parts":[[0,1],[2]],"small_index":1}"#
        );
        let q = IndependentPartition {
            parts: vec![ElementSet::full(2)],
            small_index: None,
        };
        assert_eq!(
            partition_to_json(&q),
            r#"{"parts":[[0,1]],"small_index":null}"#
        );
        assert_eq!(basis_to_json(ElementSet::full(3)), r#"{"basis":[0,1,2]}"#);
        assert_eq!(
            order_from_json(r#"{"order":[2,0,1]}"#).unwrap(),
            vec![2, 0, 1]
        );

        let text = r#"{"n":3,"fam1":[[0],[0,1]],"fam2":[[2]]}"#;
        let pair = spair_from_json(text).unwrap();
        assert_eq!(spair_to_json(&pair), text);
        assert!(matches!(
            spair_from_json(r#"{"n":2,"fam1":[[5]],"fam2":[]}"#),
            Err(IoError::SPair(_))
        ));
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fano.json");
        save(&fano(), &path).unwrap();
        assert_eq!(load(&path).unwrap(), fano());
        assert!(matches!(
            load(dir.path().join("missing.json")),
            Err(IoError::Io { .. })
        ));
    }
}
