//! Interchange formats: JSON semigroup and covariety records, CSV rows, and
//! tree exports in JSON and DOT.

use serde::{Deserialize, Serialize};

use crate::covariety::{Covariety, EnumerationTree};
use crate::error::RecordError;
use crate::semigroup::NumericalSemigroup;

/// JSON form of a semigroup. `type` is `|PF(S)|`, reported as 0 for the
/// naturals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemigroupRecord {
    pub frobenius: i32,
    pub msg: Vec<u32>,
    pub gaps: Vec<u32>,
    pub multiplicity: u32,
    pub genus: u32,
    #[serde(rename = "type")]
    pub type_: u32,
}

impl From<&NumericalSemigroup> for SemigroupRecord {
    fn from(s: &NumericalSemigroup) -> Self {
        Self {
            frobenius: s.frobenius(),
            msg: s.msg().to_vec(),
            gaps: s.gaps(),
            multiplicity: s.multiplicity(),
            genus: s.genus(),
            type_: s.type_of().unwrap_or(0),
        }
    }
}

impl SemigroupRecord {
    /// Rebuilds the semigroup from `gaps` and checks every other field
    /// against it.
    pub fn to_semigroup(&self) -> Result<NumericalSemigroup, RecordError> {
        let s = NumericalSemigroup::from_gaps(&self.gaps)?;
        let derived = SemigroupRecord::from(&s);
        let field = if derived.frobenius != self.frobenius {
            Some("frobenius")
        } else if derived.gaps != self.gaps {
            Some("gaps")
        } else if derived.msg != self.msg {
            Some("msg")
        } else if derived.multiplicity != self.multiplicity {
            Some("multiplicity")
        } else if derived.genus != self.genus {
            Some("genus")
        } else if derived.type_ != self.type_ {
            Some("type")
        } else {
            None
        };
        match field {
            Some(name) => Err(RecordError::Inconsistent(name)),
            None => Ok(s),
        }
    }
}

/// JSON form of a covariety; `maximal` indexes into `members`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovarietyRecord {
    pub delta: SemigroupRecord,
    pub members: Vec<SemigroupRecord>,
    pub maximal: Vec<usize>,
}

impl From<&Covariety> for CovarietyRecord {
    fn from(c: &Covariety) -> Self {
        Self {
            delta: c.delta().into(),
            members: c.members().iter().map(Into::into).collect(),
            maximal: c.maximal_indices().to_vec(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeVertex {
    pub id: usize,
    pub gaps: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeEdge {
    pub parent: usize,
    pub child: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub root: usize,
    pub vertices: Vec<TreeVertex>,
    pub edges: Vec<TreeEdge>,
}

impl From<&EnumerationTree> for TreeRecord {
    fn from(t: &EnumerationTree) -> Self {
        Self {
            root: t.root,
            vertices: t
                .vertices
                .iter()
                .enumerate()
                .map(|(id, s)| TreeVertex { id, gaps: s.gaps() })
                .collect(),
            edges: t
                .edges
                .iter()
                .map(|&(parent, child)| TreeEdge { parent, child })
                .collect(),
        }
    }
}

fn join(xs: &[u32], sep: &str) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(sep)
}

/// Graphviz rendering; vertices are labeled by their gap lists.
pub fn tree_to_dot(t: &EnumerationTree) -> String {
    let mut out = String::from("digraph covariety {\n");
    for (i, s) in t.vertices.iter().enumerate() {
        out.push_str(&format!(
            "  n{i} [label=\"{{{}}}\"];\n",
            join(&s.gaps(), ",")
        ));
    }
    for &(p, c) in &t.edges {
        out.push_str(&format!("  n{p} -> n{c};\n"));
    }
    out.push_str("}\n");
    out
}

pub const CSV_HEADER: &str = "frobenius,multiplicity,genus,type,embedding_dimension,rank,msg,gaps";

/// One CSV row in the column order of [`CSV_HEADER`].
pub fn csv_row(s: &NumericalSemigroup, rank: usize) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        s.frobenius(),
        s.multiplicity(),
        s.genus(),
        s.type_of().unwrap_or(0),
        s.embedding_dimension(),
        rank,
        join(s.msg(), ";"),
        join(&s.gaps(), ";"),
    )
}
