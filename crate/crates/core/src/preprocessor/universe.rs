use std::fmt;

use rustc_hash::FxHashMap;

use crate::kb_model::{ConceptName, IndividualName, RoleName, StandpointName};

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub u32);

        impl $name {
            pub fn index(self) -> usize {
                self.0 as usize
            }
        }
    };
}

id_type!(
    /// Interned standpoint.
    Sp
);
id_type!(
    /// Interned extended concept.
    Cn
);
id_type!(
    /// Interned role.
    Rl
);
id_type!(
    /// Interned individual.
    Ind
);

pub const STAR: Sp = Sp(0);
pub const TOP: Cn = Cn(0);
pub const BOT: Cn = Cn(1);

/// Atomic concepts of the saturation calculus.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtConcept {
    Top,
    Bottom,
    Name(ConceptName),
    Nominal(IndividualName),
    SelfConcept(RoleName),
}

impl fmt::Display for ExtConcept {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtConcept::Top => f.write_str("Top"),
            ExtConcept::Bottom => f.write_str("Bot"),
            ExtConcept::Name(n) => write!(f, "{n}"),
            ExtConcept::Nominal(a) => write!(f, "{{{a}}}"),
            ExtConcept::SelfConcept(r) => write!(f, "Self({r})"),
        }
    }
}

/// How a standpoint or concept entered the universe.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Vocabulary,
    Witness,
}

/// The fixed name universes over which saturation runs.
///
/// `*`, `⊤` and `⊥` always carry ids [`STAR`], [`TOP`] and [`BOT`].
#[derive(Clone, Debug)]
pub struct Universe {
    standpoints: Vec<StandpointName>,
    standpoint_origin: Vec<Provenance>,
    concepts: Vec<ExtConcept>,
    concept_origin: Vec<Provenance>,
    roles: Vec<RoleName>,
    individuals: Vec<IndividualName>,
    sp_ids: FxHashMap<StandpointName, Sp>,
    cn_ids: FxHashMap<ExtConcept, Cn>,
    rl_ids: FxHashMap<RoleName, Rl>,
    ind_ids: FxHashMap<IndividualName, Ind>,
    nominal_of: Vec<Cn>,
    self_of: Vec<Cn>,
    individual_of: Vec<Option<Ind>>,
    role_of_self: Vec<Option<Rl>>,
}

impl Universe {
    /// Registers `*`, `⊤`, `⊥`, the given names, one nominal per individual and one
    /// self-concept per role. Inputs are deduplicated; order is preserved.
    pub fn new<'a>(
        standpoints: impl IntoIterator<Item = &'a StandpointName>,
        concepts: impl IntoIterator<Item = &'a ConceptName>,
        roles: impl IntoIterator<Item = &'a RoleName>,
        individuals: impl IntoIterator<Item = &'a IndividualName>,
    ) -> Universe {
        let mut u = Universe {
            standpoints: Vec::new(),
            standpoint_origin: Vec::new(),
            concepts: Vec::new(),
            concept_origin: Vec::new(),
            roles: Vec::new(),
            individuals: Vec::new(),
            sp_ids: FxHashMap::default(),
            cn_ids: FxHashMap::default(),
            rl_ids: FxHashMap::default(),
            ind_ids: FxHashMap::default(),
            nominal_of: Vec::new(),
            self_of: Vec::new(),
            individual_of: Vec::new(),
            role_of_self: Vec::new(),
        };
        u.add_standpoint(StandpointName::star(), Provenance::Vocabulary);
        u.add_concept(ExtConcept::Top, Provenance::Vocabulary);
        u.add_concept(ExtConcept::Bottom, Provenance::Vocabulary);
        for s in standpoints {
            u.add_standpoint(s.clone(), Provenance::Vocabulary);
        }
        for c in concepts {
            u.add_concept(ExtConcept::Name(c.clone()), Provenance::Vocabulary);
        }
        let individuals: Vec<IndividualName> = individuals.into_iter().cloned().collect();
        for a in &individuals {
            if u.ind_ids.contains_key(a) {
                continue;
            }
            let id = Ind(u.individuals.len() as u32);
            u.individuals.push(a.clone());
            u.ind_ids.insert(a.clone(), id);
            let cn = u.add_concept(ExtConcept::Nominal(a.clone()), Provenance::Vocabulary);
            u.nominal_of.push(cn);
            u.individual_of[cn.index()] = Some(id);
        }
        for r in roles {
            if u.rl_ids.contains_key(r) {
                continue;
            }
            let id = Rl(u.roles.len() as u32);
            u.roles.push(r.clone());
            u.rl_ids.insert(r.clone(), id);
            let cn = u.add_concept(ExtConcept::SelfConcept(r.clone()), Provenance::Vocabulary);
            u.self_of.push(cn);
            u.role_of_self[cn.index()] = Some(id);
        }
        u
    }

    /// Interns a standpoint, returning the existing id if present.
    pub fn add_standpoint(&mut self, name: StandpointName, origin: Provenance) -> Sp {
        if let Some(&id) = self.sp_ids.get(&name) {
            return id;
        }
        let id = Sp(self.standpoints.len() as u32);
        self.standpoints.push(name.clone());
        self.standpoint_origin.push(origin);
        self.sp_ids.insert(name, id);
        id
    }

    /// Interns a concept, returning the existing id if present. Nominals and self-concepts
    /// must be registered through [`Universe::new`].
    pub fn add_concept(&mut self, c: ExtConcept, origin: Provenance) -> Cn {
        if let Some(&id) = self.cn_ids.get(&c) {
            return id;
        }
        let id = Cn(self.concepts.len() as u32);
        self.concepts.push(c.clone());
        self.concept_origin.push(origin);
        self.individual_of.push(None);
        self.role_of_self.push(None);
        self.cn_ids.insert(c, id);
        id
    }

    pub fn num_standpoints(&self) -> usize {
        self.standpoints.len()
    }

    pub fn num_concepts(&self) -> usize {
        self.concepts.len()
    }

    pub fn num_roles(&self) -> usize {
        self.roles.len()
    }

    pub fn num_individuals(&self) -> usize {
        self.individuals.len()
    }

    pub fn standpoint_ids(&self) -> impl Iterator<Item = Sp> {
        (0..self.standpoints.len() as u32).map(Sp)
    }

    pub fn concept_ids(&self) -> impl Iterator<Item = Cn> {
        (0..self.concepts.len() as u32).map(Cn)
    }

    pub fn role_ids(&self) -> impl Iterator<Item = Rl> {
        (0..self.roles.len() as u32).map(Rl)
    }

    pub fn individual_ids(&self) -> impl Iterator<Item = Ind> {
        (0..self.individuals.len() as u32).map(Ind)
    }

    pub fn standpoint(&self, id: Sp) -> &StandpointName {
        &self.standpoints[id.index()]
    }

    pub fn concept(&self, id: Cn) -> &ExtConcept {
        &self.concepts[id.index()]
    }

    pub fn role(&self, id: Rl) -> &RoleName {
        &self.roles[id.index()]
    }

    pub fn individual(&self, id: Ind) -> &IndividualName {
        &self.individuals[id.index()]
    }

    pub fn standpoint_provenance(&self, id: Sp) -> Provenance {
        self.standpoint_origin[id.index()]
    }

    pub fn concept_provenance(&self, id: Cn) -> Provenance {
        self.concept_origin[id.index()]
    }

    pub fn sp(&self, name: &StandpointName) -> Option<Sp> {
        self.sp_ids.get(name).copied()
    }

    pub fn sp_by_text(&self, text: &str) -> Option<Sp> {
        self.sp(&StandpointName::new(text))
    }

    pub fn cn(&self, c: &ExtConcept) -> Option<Cn> {
        self.cn_ids.get(c).copied()
    }

    pub fn concept_name(&self, text: &str) -> Option<Cn> {
        self.cn(&ExtConcept::Name(ConceptName::new(text)))
    }

    pub fn rl(&self, name: &RoleName) -> Option<Rl> {
        self.rl_ids.get(name).copied()
    }

    pub fn ind(&self, name: &IndividualName) -> Option<Ind> {
        self.ind_ids.get(name).copied()
    }

    /// The nominal concept `{a}`.
    pub fn nominal(&self, a: Ind) -> Cn {
        self.nominal_of[a.index()]
    }

    /// The concept `∃R.Self`.
    pub fn self_concept(&self, r: Rl) -> Cn {
        self.self_of[r.index()]
    }

    /// The individual `a` if `c` is `{a}`.
    pub fn as_nominal(&self, c: Cn) -> Option<Ind> {
        self.individual_of[c.index()]
    }

    /// The role `R` if `c` is `∃R.Self`.
    pub fn as_self(&self, c: Cn) -> Option<Rl> {
        self.role_of_self[c.index()]
    }
}
