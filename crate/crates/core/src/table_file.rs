//! Cayley-table JSON documents: `{"order": n, "table": [[...],...], "name": "..."}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::FiniteSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDocument {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl TableDocument {
    pub fn from_semigroup(s: &FiniteSemigroup) -> Self {
        TableDocument {
            order: s.order(),
            table: s.rows(),
            name: s.name().map(str::to_owned),
        }
    }

    pub fn into_semigroup(self) -> Result<FiniteSemigroup> {
        let s = FiniteSemigroup::from_table(self.order, &self.table)?;
        Ok(match self.name {
            Some(name) => s.with_name(name),
            None => s,
        })
    }
}

pub fn parse_table(json: &str) -> Result<FiniteSemigroup> {
    let doc: TableDocument = serde_json::from_str(json).map_err(|e| Error::Parse(format!("Cayley table: {e}")))?;
    doc.into_semigroup()
}

pub fn to_json(s: &FiniteSemigroup) -> String {
    serde_json::to_string(&TableDocument::from_semigroup(s)).expect("table serializes")
}

pub fn read_table(path: &Path) -> Result<FiniteSemigroup> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("reading {}: {e}", path.display())))?;
    parse_table(&text)
}
