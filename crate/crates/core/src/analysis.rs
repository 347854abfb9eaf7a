//! Splitting a faithful representation along a normal subgroup, Goursat data
//! for subgroups of direct products, and the five fixed-point conditions
//! used to pin down the fixed-point set of a group action.

use alloc::string::String;
use alloc::vec::Vec;

use hashbrown::HashSet;

use crate::character::{sub_functions, CharacterTable, ClassFunction};
use crate::cyclotomic::Cyclotomic;
use crate::error::Error;
use crate::family::{in_family, in_g_calligraphic, FamilyWitness};
use crate::group::{coset_action, DirectProduct, PermGroup};
use crate::induction::{class_counts, fixed_dim_from_counts, fixed_subspace_character, kernel_of_character};
use crate::iso::is_isomorphic;
use crate::real::{is_faithful, RealModule};
use crate::structure::{fitting_subgroup, intersection, is_normal, is_power_of, is_prime_power, join};

/// `U = U^L ⊕ U_L` for a faithful character and a normal subgroup `L`,
/// with `H = ker χ^L` and `K = ker χ_L`.
#[derive(Clone, Debug)]
pub struct SovSplit {
    pub l: PermGroup,
    pub fixed: ClassFunction,
    pub moved: ClassFunction,
    /// Degree of the `L`-fixed part.
    pub l_degree: u64,
    /// Degree of the complement.
    pub m_degree: u64,
    pub h: PermGroup,
    pub k: PermGroup,
    /// Checkable forms of the six claims, in order: `H ∩ K = E`;
    /// `G -> G/H x G/K` is injective; `L <= H` and `H` acts faithfully on
    /// the `m`-dimensional part; `K` acts faithfully on the `l`-dimensional
    /// part; `G/H` and `G/K` act faithfully on the respective parts.
    pub claims: [bool; 6],
}

impl SovSplit {
    pub fn verified(&self) -> bool {
        self.claims.iter().all(|&c| c)
    }
}

fn degree_of(f: &[Cyclotomic]) -> Result<u64, Error> {
    f[0].to_integer()
        .and_then(|d| u64::try_from(d).ok())
        .ok_or(Error::Defect("character degree is not a nonnegative integer"))
}

/// True iff `f(x) != f(1)` for every nonidentity `x` in `s`.
fn faithful_on(table: &CharacterTable, f: &[Cyclotomic], s: &PermGroup) -> Result<bool, Error> {
    let counts = class_counts(table, s)?;
    Ok(counts.iter().enumerate().skip(1).all(|(k, &c)| c == 0 || f[k] != f[0]))
}

pub fn sov_split(table: &CharacterTable, chi: &[Cyclotomic], l: &PermGroup) -> Result<SovSplit, Error> {
    table.check_len(chi)?;
    let g = table.group();
    if !is_normal(l, g)? {
        return Err(Error::NotNormal);
    }
    if !is_faithful(chi) {
        return Err(Error::NotFaithful);
    }
    let fixed = fixed_subspace_character(table, chi, l)?;
    let moved = sub_functions(chi, &fixed);
    let l_degree = degree_of(&fixed)?;
    let m_degree = degree_of(&moved)?;
    let h = kernel_of_character(table, &fixed)?;
    let k = kernel_of_character(table, &moved)?;

    let meet = intersection(&h, &k)?;
    let injective = {
        let ah = coset_action(g, &h)?;
        let ak = coset_action(g, &k)?;
        let pairs: HashSet<(usize, usize)> = g
            .elements()?
            .iter()
            .map(|x| (ah.coset_of(x).unwrap(), ak.coset_of(x).unwrap()))
            .collect();
        pairs.len() as u128 == g.order()
    };
    let l_in_h = l.generators().iter().all(|x| h.has(x));
    let quotient_h = l_degree > 0 || h.order() == g.order();
    let quotient_k = m_degree > 0 || k.order() == g.order();
    let claims = [
        meet.is_trivial(),
        injective,
        l_in_h && faithful_on(table, &moved, &h)?,
        faithful_on(table, &fixed, &k)?,
        quotient_h && is_normal(&h, g)?,
        quotient_k && is_normal(&k, g)?,
    ];
    Ok(SovSplit {
        l: l.clone(),
        fixed,
        moved,
        l_degree,
        m_degree,
        h,
        k,
        claims,
    })
}

/// With `L = F(G)`, the Fitting subgroup of `K` must be trivial.
pub fn fitting_kernel_check(table: &CharacterTable, split: &SovSplit) -> Result<bool, Error> {
    if !fitting_subgroup(table.group())?.same_elements(&split.l) {
        return Err(Error::Precondition("split was not taken along the Fitting subgroup"));
    }
    Ok(fitting_subgroup(&split.k)?.is_trivial())
}

/// Goursat data of `G <= A x B`.
#[derive(Clone, Debug)]
pub struct Goursat {
    /// Projections of `G` to the two factors.
    pub h: PermGroup,
    pub k: PermGroup,
    /// `H_1 = {a : (a, 1) in G}` and `K_1 = {b : (1, b) in G}`.
    pub h1: PermGroup,
    pub k1: PermGroup,
    /// `|G| = |H_1| |K_1| [H : H_1]`.
    pub order_identity: bool,
    /// `(a, b) in G` induces a well-defined bijection `H/H_1 -> K/K_1`.
    pub graph_is_bijection: bool,
    /// `H/H_1 ≅ K/K_1` as abstract groups; `None` when too large to test.
    pub quotients_isomorphic: Option<bool>,
}

pub fn goursat(product: &DirectProduct, g: &PermGroup) -> Result<Goursat, Error> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    for x in g.generators() {
        let (a, b) = product.split(x)?;
        left.push(a);
        right.push(b);
    }
    let h = PermGroup::new(product.left_degree(), left)?;
    let k = PermGroup::new(product.right_degree(), right)?;
    let proj = |s: &PermGroup, left_side: bool| -> Result<PermGroup, Error> {
        let mut gens = Vec::new();
        for x in s.generators() {
            let (a, b) = product.split(x)?;
            gens.push(if left_side { a } else { b });
        }
        let degree = if left_side { product.left_degree() } else { product.right_degree() };
        PermGroup::new(degree, gens)
    };
    let h1 = proj(&intersection(g, &product.left_factor())?, true)?;
    let k1 = proj(&intersection(g, &product.right_factor())?, false)?;
    let index = h.order() / h1.order();
    let order_identity = g.order() == h1.order() * k1.order() * index && k.order() / k1.order() == index;

    let ah = coset_action(&h, &h1)?;
    let ak = coset_action(&k, &k1)?;
    let mut image = alloc::vec![usize::MAX; ah.index()];
    let mut graph_is_bijection = ah.index() == ak.index();
    for x in g.elements()?.iter() {
        let (a, b) = product.split(x)?;
        let i = ah.coset_of(&a).ok_or(Error::Defect("projection outside H"))?;
        let j = ak.coset_of(&b).ok_or(Error::Defect("projection outside K"))?;
        if image[i] == usize::MAX {
            image[i] = j;
        } else if image[i] != j {
            graph_is_bijection = false;
        }
    }
    let distinct: HashSet<usize> = image.iter().copied().collect();
    graph_is_bijection &= distinct.len() == image.len() && !distinct.contains(&usize::MAX);

    let quotients_isomorphic = match is_isomorphic(&ah.image, &ak.image) {
        Ok(r) => Some(r.is_some()),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(Goursat {
        h,
        k,
        h1,
        k1,
        order_identity,
        graph_is_bijection,
        quotients_isomorphic,
    })
}

/// A subgroup together with the label used in reports.
#[derive(Clone, Copy, Debug)]
pub struct Named<'a> {
    pub name: &'a str,
    pub group: &'a PermGroup,
}

#[derive(Clone, Debug)]
pub struct S0Report {
    pub group: String,
    pub module: String,
    /// Names of `Q`, `P_2`, `H`, `K`.
    pub subgroups: [String; 4],
    /// Fixed-point dimensions at `Q`, `P_2`, `H`, `K`.
    pub dims: [u64; 4],
    /// Conditions (1)–(5) as stated for the specific groups:
    /// `|Q|` a prime power with no fixed points; `<H, K> = G`;
    /// `H ∩ K = P_2`, a 2-group; `H, K ∈ G_2^2`; `dim V^{P_2} = dim V^H + dim V^K`.
    pub conditions: [bool; 5],
    /// The weaker requirement that `K` (resp. `H`) lies in some `G_p^q`
    /// whenever `dim V^H` (resp. `dim V^K`) is zero.
    pub vanishing_condition: bool,
    pub h_witness: Option<FamilyWitness>,
    pub k_witness: Option<FamilyWitness>,
}

impl S0Report {
    pub fn pass(&self) -> bool {
        self.conditions.iter().all(|&c| c)
    }
}

pub fn check_s0_conditions(
    group_name: &str,
    table: &CharacterTable,
    module: &RealModule,
    subgroups: [Named<'_>; 4],
) -> Result<S0Report, Error> {
    let g = table.group();
    for s in &subgroups {
        if s.group.degree() != g.degree() || !s.group.generators().iter().all(|x| g.has(x)) {
            return Err(Error::NotASubgroup("subgroup not contained in G"));
        }
    }
    let [q, p2, h, k] = subgroups;
    let mut dims = [0u64; 4];
    for (d, s) in dims.iter_mut().zip(&subgroups) {
        let counts = class_counts(table, s.group)?;
        *d = fixed_dim_from_counts(table, &module.real_character, &counts, s.group.order())?;
    }
    let meet = intersection(h.group, k.group)?;
    let h_witness = in_family(h.group, 2, 2)?;
    let k_witness = in_family(k.group, 2, 2)?;
    let vanishing_condition = (dims[2] != 0 || in_g_calligraphic(k.group)?.is_some())
        && (dims[3] != 0 || in_g_calligraphic(h.group)?.is_some());
    let conditions = [
        is_prime_power(q.group.order()) && dims[0] == 0,
        join(h.group, k.group)?.order() == g.order(),
        is_power_of(p2.group.order(), 2) && meet.same_elements(p2.group),
        h_witness.is_some() && k_witness.is_some() && vanishing_condition,
        dims[1] == dims[2] + dims[3],
    ];
    Ok(S0Report {
        group: group_name.into(),
        module: module.name.clone(),
        subgroups: [q.name.into(), p2.name.into(), h.name.into(), k.name.into()],
        dims,
        conditions,
        vanishing_condition,
        h_witness,
        k_witness,
    })
}
