//! The expected values checked by the certificate, read from TOML.

use serde::Deserialize;

pub const EXPECTATIONS_TOML: &str = include_str!("../data/expectations.toml");

#[derive(Clone, Debug, Deserialize)]
pub struct Expectations {
    pub version: u32,
    pub dimension_table: Vec<DimensionTable>,
    pub indicator: Vec<Indicator>,
    pub degree_count: Vec<DegreeCount>,
    pub order: Vec<OrderFact>,
    pub structure: Vec<Structure>,
    pub no_faithful: Vec<NoFaithful>,
    pub real_module_count: Vec<RealModuleCount>,
    pub faithful_six: Vec<FaithfulList>,
    pub five_conditions: FiveConditions,
    pub s5: S5Facts,
    pub a5xa5: ProductFacts,
    pub a5xc2: CentralFacts,
    pub a5_subgroups: A5Subgroups,
    pub a6_subgroups: A6Subgroups,
    pub oliver: OliverList,
    pub desk: Desk,
    pub g1_generators: G1Generators,
}

impl Expectations {
    pub fn embedded() -> Result<Self, toml::de::Error> {
        toml::from_str(EXPECTATIONS_TOML)
    }

    pub fn parse(text: &str) -> Result<Self, toml::de::Error> {
        toml::from_str(text)
    }

    pub fn table(&self, id: &str) -> Option<&DimensionTable> {
        self.dimension_table.iter().find(|t| t.id == id)
    }
}

#[derive(Clone, Debug, Deserialize)]
pub struct DimensionTable {
    pub id: String,
    pub anchor: String,
    pub group: String,
    pub prefix: String,
    pub columns: Vec<String>,
    pub subgroups: Vec<String>,
    pub rows: Vec<DimensionRow>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct DimensionRow {
    pub module: String,
    pub dims: Vec<u64>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Indicator {
    pub anchor: String,
    pub group: String,
    pub degree: u64,
    pub occurrence: usize,
    pub fs: i8,
    pub real_degree: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct DegreeCount {
    pub anchor: String,
    pub group: String,
    pub degree: u64,
    pub count: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct OrderFact {
    pub anchor: String,
    pub group: String,
    pub order: u128,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Structure {
    pub anchor: String,
    pub group: String,
    #[serde(default)]
    pub simple: bool,
    #[serde(default)]
    pub series: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct NoFaithful {
    pub anchor: String,
    pub group: String,
    pub max_degree: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct RealModuleCount {
    pub anchor: String,
    pub group: String,
    pub degree: u64,
    pub count: usize,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FaithfulList {
    pub anchor: String,
    pub groups: Vec<String>,
    pub max_degree: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FiveConditions {
    pub anchor: String,
    pub cases: Vec<FiveConditionCase>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct FiveConditionCase {
    pub group: String,
    pub module: String,
    pub subgroups: [String; 4],
}

#[derive(Clone, Debug, Deserialize)]
pub struct S5Facts {
    pub anchor: String,
    pub group: String,
    pub subgroup: String,
    pub c2: String,
    pub induced_from: String,
    pub degree: u64,
    pub restriction: Vec<String>,
    pub fixed_dim_c2: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct ProductFacts {
    pub anchor: String,
    pub group: String,
    pub factor: String,
    pub h1: String,
    pub dims: [u64; 3],
    pub whole_factor_dims: [u64; 2],
}

#[derive(Clone, Debug, Deserialize)]
pub struct CentralFacts {
    pub anchor: String,
    pub group: String,
    pub factor: String,
    pub fixed_dim_z: u64,
}

#[derive(Clone, Debug, Deserialize)]
pub struct A5Subgroups {
    pub anchor: String,
    pub group: String,
    pub c2: String,
    pub d4: String,
    pub d6: String,
    pub a4: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct A6Subgroups {
    pub anchor: String,
    pub normal: String,
    pub overgroup: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct OliverList {
    pub anchor: String,
    pub groups: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Desk {
    pub anchor: String,
    pub sov_anchor: String,
    pub family_anchor: String,
    pub goursat_anchor: String,
    pub dihedral_products: Vec<Vec<usize>>,
}

/// A recorded discrepancy between the listed generators of a group and the
/// subgroups declared inside it.
#[derive(Clone, Debug, Deserialize)]
pub struct G1Generators {
    pub anchor: String,
    pub listed: String,
    pub generated: String,
    pub subgroups: Vec<String>,
    pub contains_subgroups: bool,
    pub isomorphic: bool,
    pub conjugator: String,
}
