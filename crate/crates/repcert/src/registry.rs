//! Named groups shipped with the crate, with cached element and character tables.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use repcert_core::character::{character_table, CharacterTable};
use repcert_core::groupfile::parse_group_file;
use repcert_core::structure::is_subgroup;
use repcert_core::PermGroup;
use serde::Deserialize;

pub const REGISTRY_TOML: &str = include_str!("../data/registry.toml");

static GROUP_FILES: &[(&str, &str)] = &[
    ("groups/a5.grp", include_str!("../data/groups/a5.grp")),
    ("groups/a5_a4.grp", include_str!("../data/groups/a5_a4.grp")),
    ("groups/a5_c2.grp", include_str!("../data/groups/a5_c2.grp")),
    ("groups/a5_c3.grp", include_str!("../data/groups/a5_c3.grp")),
    ("groups/a5_c5.grp", include_str!("../data/groups/a5_c5.grp")),
    ("groups/a5_d10.grp", include_str!("../data/groups/a5_d10.grp")),
    ("groups/a5_d4.grp", include_str!("../data/groups/a5_d4.grp")),
    ("groups/a5_d6.grp", include_str!("../data/groups/a5_d6.grp")),
    ("groups/a5xa5.grp", include_str!("../data/groups/a5xa5.grp")),
    ("groups/a5xc2.grp", include_str!("../data/groups/a5xc2.grp")),
    ("groups/a6.grp", include_str!("../data/groups/a6.grp")),
    ("groups/a6_c3c3.grp", include_str!("../data/groups/a6_c3c3.grp")),
    ("groups/a6_c3c3c4.grp", include_str!("../data/groups/a6_c3c3c4.grp")),
    ("groups/g1.grp", include_str!("../data/groups/g1.grp")),
    ("groups/g1_h.grp", include_str!("../data/groups/g1_h.grp")),
    ("groups/g1_k.grp", include_str!("../data/groups/g1_k.grp")),
    ("groups/g1_p2.grp", include_str!("../data/groups/g1_p2.grp")),
    ("groups/g1_q.grp", include_str!("../data/groups/g1_q.grp")),
    ("groups/g2.grp", include_str!("../data/groups/g2.grp")),
    ("groups/g2_h.grp", include_str!("../data/groups/g2_h.grp")),
    ("groups/g2_k.grp", include_str!("../data/groups/g2_k.grp")),
    ("groups/g2_p2.grp", include_str!("../data/groups/g2_p2.grp")),
    ("groups/g2_q.grp", include_str!("../data/groups/g2_q.grp")),
    ("groups/g3.grp", include_str!("../data/groups/g3.grp")),
    ("groups/g3_h.grp", include_str!("../data/groups/g3_h.grp")),
    ("groups/g3_k.grp", include_str!("../data/groups/g3_k.grp")),
    ("groups/g3_p2.grp", include_str!("../data/groups/g3_p2.grp")),
    ("groups/g3_q.grp", include_str!("../data/groups/g3_q.grp")),
    ("groups/psl27.grp", include_str!("../data/groups/psl27.grp")),
    ("groups/psu33.grp", include_str!("../data/groups/psu33.grp")),
    ("groups/s5.grp", include_str!("../data/groups/s5.grp")),
    ("groups/s5_c2.grp", include_str!("../data/groups/s5_c2.grp")),
];

#[derive(Debug, thiserror::Error)]
pub enum RegistryError {
    #[error("registry index: {0}")]
    Index(#[from] toml::de::Error),
    #[error("unknown group `{0}`")]
    Unknown(String),
    #[error("{name}: missing file {file}")]
    MissingFile { name: String, file: String },
    #[error("{name}: {message}")]
    Group { name: String, message: String },
}

#[derive(Clone, Debug, Deserialize)]
pub struct Entry {
    pub name: String,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub file: String,
    pub order: u128,
    pub parent: Option<String>,
}

#[derive(Deserialize)]
struct Index {
    group: Vec<Entry>,
}

struct Slot {
    entry: Entry,
    group: OnceLock<Result<PermGroup, String>>,
    table: OnceLock<Result<CharacterTable, String>>,
}

/// Lookup by canonical name or alias. Groups and tables are built on first use
/// and shared between threads.
pub struct Registry {
    slots: Vec<Slot>,
    names: BTreeMap<String, usize>,
}

impl Registry {
    pub fn embedded() -> Result<Self, RegistryError> {
        Self::from_toml(REGISTRY_TOML)
    }

    pub fn from_toml(text: &str) -> Result<Self, RegistryError> {
        let index: Index = toml::from_str(text)?;
        let mut names = BTreeMap::new();
        let mut slots = Vec::new();
        for entry in index.group {
            let i = slots.len();
            names.insert(entry.name.clone(), i);
            for a in &entry.aliases {
                names.insert(a.clone(), i);
            }
            slots.push(Slot {
                entry,
                group: OnceLock::new(),
                table: OnceLock::new(),
            });
        }
        Ok(Registry { slots, names })
    }

    pub fn entries(&self) -> impl Iterator<Item = &Entry> {
        self.slots.iter().map(|s| &s.entry)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.contains_key(name)
    }

    fn slot(&self, name: &str) -> Result<&Slot, RegistryError> {
        self.names
            .get(name)
            .map(|&i| &self.slots[i])
            .ok_or_else(|| RegistryError::Unknown(name.to_string()))
    }

    pub fn entry(&self, name: &str) -> Result<&Entry, RegistryError> {
        Ok(&self.slot(name)?.entry)
    }

    /// Text of the group file behind `name`.
    pub fn source(&self, name: &str) -> Result<&'static str, RegistryError> {
        let entry = &self.slot(name)?.entry;
        GROUP_FILES
            .iter()
            .find(|(f, _)| *f == entry.file)
            .map(|(_, text)| *text)
            .ok_or_else(|| RegistryError::MissingFile {
                name: entry.name.clone(),
                file: entry.file.clone(),
            })
    }

    pub fn group(&self, name: &str) -> Result<&PermGroup, RegistryError> {
        let slot = self.slot(name)?;
        let text = self.source(name)?;
        slot.group
            .get_or_init(|| {
                let spec = parse_group_file(text).map_err(|e| e.to_string())?;
                spec.group().map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(|m| RegistryError::Group {
                name: slot.entry.name.clone(),
                message: m.clone(),
            })
    }

    pub fn table(&self, name: &str) -> Result<&CharacterTable, RegistryError> {
        let slot = self.slot(name)?;
        let group = self.group(name)?;
        slot.table
            .get_or_init(|| character_table(group).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(|m| RegistryError::Group {
                name: slot.entry.name.clone(),
                message: m.clone(),
            })
    }

    /// Declared order matches, and the parent (if any) contains the group.
    pub fn consistent(&self, name: &str) -> Result<bool, RegistryError> {
        let entry = self.entry(name)?;
        let g = self.group(name)?;
        if g.order() != entry.order {
            return Ok(false);
        }
        match &entry.parent {
            None => Ok(true),
            Some(p) => {
                let parent = self.group(p)?;
                Ok(is_subgroup(g, parent).unwrap_or(false))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_has_a_file() {
        let r = Registry::embedded().unwrap();
        for e in r.entries() {
            assert!(r.source(&e.name).is_ok(), "{}", e.name);
        }
        assert_eq!(r.entries().count(), GROUP_FILES.len());
    }

    #[test]
    fn aliases_resolve() {
        let r = Registry::embedded().unwrap();
        assert_eq!(r.entry("G3").unwrap().name, "PSU(4,2)");
        assert_eq!(r.group("G2").unwrap().order(), 2520);
    }
}
