//! Worklist saturation. A fact is added to the join indexes when it is taken off the queue
//! and then joined, from each premise position it can fill, against facts already indexed.

use std::collections::VecDeque;
use std::hash::Hash;

use rustc_hash::FxHashMap;
use smallvec::{smallvec, SmallVec};

use super::rules::RuleId;
use super::{SaturationConfig, SaturationError, SaturationStats, WorklistOrder};
use crate::preprocessor::{Cn, Fact, FactId, FactStore, Ind, Origin, Rl, Sp, BOT, REFUTATION, STAR, TOP};

type Ids = Vec<FactId>;
type Index<K> = FxHashMap<K, Ids>;

fn push<K: Hash + Eq>(map: &mut Index<K>, key: K, id: FactId) {
    map.entry(key).or_default().push(id);
}

fn get<'a, K: Hash + Eq>(map: &'a Index<K>, key: &K) -> &'a [FactId] {
    map.get(key).map(Vec::as_slice).unwrap_or(&[])
}

#[derive(Default)]
struct Indexes {
    sh_by_lhs: Index<Sp>,
    sh_by_rhs: Index<Sp>,
    shi_by_pair: Index<(Sp, Sp)>,
    outer: Index<Sp>,
    n_by_inner: Index<Sp>,
    n_by_tcsd: Index<(Sp, Cn, Sp, Cn)>,
    n_by_tcse: Index<(Sp, Cn, Sp, Cn)>,
    n_by_outer: Index<(Sp, Cn)>,
    n_by_se: Index<(Sp, Cn)>,
    n_inner_top: Index<(Sp, Cn)>,
    tbox_by_sd: Index<(Sp, Cn)>,
    tbox_by_se: Index<(Sp, Cn)>,
    abox_by_sb: Index<(Sp, Ind)>,
    abox_by_sc: Index<(Sp, Cn)>,
    dia_by_outer: Index<(Sp, Cn)>,
    dia_by_inner: Index<(Sp, Cn)>,
    exr_by_lhs: Index<(Sp, Cn)>,
    exr_by_filler: Index<(Sp, Cn)>,
    exr_by_role: Index<(Sp, Rl)>,
    exr_by_role_filler: Index<(Sp, Rl, Cn)>,
    exl_by_role_filler: Index<(Sp, Rl, Cn)>,
    con_by_pair: Index<(Sp, Cn, Cn)>,
    ria2_by_lhs: Index<(Sp, Rl)>,
    ria2_by_rhs: Index<(Sp, Rl)>,
    ria3_by_pair: Index<(Sp, Rl, Rl)>,
    ra_by_role: Index<(Sp, Rl)>,
    ra_by_subj: Index<(Sp, Ind)>,
    ra_by_obj: Index<(Sp, Ind)>,
}

struct Derivation {
    fact: Fact,
    rule: RuleId,
    premises: SmallVec<[FactId; 4]>,
}

pub(super) struct Engine<'c> {
    store: FactStore,
    idx: Indexes,
    queue: VecDeque<FactId>,
    config: &'c SaturationConfig,
    stats: SaturationStats,
}

impl<'c> Engine<'c> {
    pub(super) fn new(store: FactStore, config: &'c SaturationConfig) -> Engine<'c> {
        let queue = (0..store.len() as u32).map(FactId).collect();
        Engine { store, idx: Indexes::default(), queue, config, stats: SaturationStats::default() }
    }

    pub(super) fn run(mut self) -> Result<(FactStore, SaturationStats), SaturationError> {
        self.stats.seed_facts = self.store.len();
        self.seed_tautologies()?;
        let mut stopped = false;
        while let Some(id) = self.next() {
            self.stats.processed += 1;
            let fact = self.store.fact(id);
            self.index(id, fact);
            let mut out = Vec::new();
            self.join(id, fact, &mut out);
            if self.emit(out)? {
                stopped = true;
                break;
            }
        }
        self.store.set_complete(!stopped || self.queue.is_empty());
        self.stats.total_facts = self.store.len();
        Ok((self.store, self.stats))
    }

    fn next(&mut self) -> Option<FactId> {
        match self.config.order {
            WorklistOrder::Fifo => self.queue.pop_front(),
            WorklistOrder::Lifo => self.queue.pop_back(),
        }
    }

    fn seed_tautologies(&mut self) -> Result<(), SaturationError> {
        let u = self.store.universe();
        let mut out = Vec::new();
        let none = SmallVec::new;
        for s in u.standpoint_ids() {
            out.push(Derivation { fact: Fact::Sharper(s, STAR), rule: RuleId::T1, premises: none() });
            out.push(Derivation { fact: Fact::Sharper(s, s), rule: RuleId::T2, premises: none() });
        }
        for c in u.concept_ids() {
            out.push(Derivation { fact: Fact::GciNested(STAR, TOP, STAR, c, c), rule: RuleId::T3, premises: none() });
            out.push(Derivation { fact: Fact::GciNested(STAR, TOP, STAR, c, TOP), rule: RuleId::T4, premises: none() });
        }
        for r in u.role_ids() {
            out.push(Derivation { fact: Fact::Ria2(STAR, r, r), rule: RuleId::T5, premises: none() });
        }
        self.emit(out)?;
        Ok(())
    }

    /// Inserts conclusions; returns true when an early exit on refutation is due.
    fn emit(&mut self, out: Vec<Derivation>) -> Result<bool, SaturationError> {
        let refuted_before = self.store.is_refuted();
        for d in out {
            let (id, new) = self.store.insert(d.fact, Origin::Derived { rule: d.rule, premises: d.premises });
            if !new {
                continue;
            }
            *self.stats.by_rule.entry(d.rule).or_default() += 1;
            if self.store.len() > self.config.fact_limit {
                return Err(SaturationError::FactLimit { limit: self.config.fact_limit });
            }
            self.queue.push_back(id);
        }
        Ok(self.config.early_exit_on_refutation && (refuted_before || self.store.is_refuted()))
    }

    fn index(&mut self, id: FactId, fact: Fact) {
        let ix = &mut self.idx;
        let u = self.store.universe();
        if let Some(s) = fact.outer() {
            push(&mut ix.outer, s, id);
        }
        match fact {
            Fact::Sharper(a, b) => {
                push(&mut ix.sh_by_lhs, a, id);
                push(&mut ix.sh_by_rhs, b, id);
            }
            Fact::SharperIntersection(a, b, _) => push(&mut ix.shi_by_pair, (a, b), id),
            Fact::Ria2(s, r, r1) => {
                push(&mut ix.ria2_by_lhs, (s, r), id);
                push(&mut ix.ria2_by_rhs, (s, r1), id);
            }
            Fact::Ria3(s, r1, r2, _) => push(&mut ix.ria3_by_pair, (s, r1, r2), id),
            Fact::GciNested(t, c, s, d, e) => {
                push(&mut ix.n_by_inner, s, id);
                push(&mut ix.n_by_tcsd, (t, c, s, d), id);
                push(&mut ix.n_by_tcse, (t, c, s, e), id);
                push(&mut ix.n_by_outer, (t, c), id);
                push(&mut ix.n_by_se, (s, e), id);
                if d == TOP {
                    push(&mut ix.n_inner_top, (s, e), id);
                }
                if t == STAR && c == TOP {
                    push(&mut ix.tbox_by_sd, (s, d), id);
                    push(&mut ix.tbox_by_se, (s, e), id);
                }
                if let (STAR, Some(b), TOP) = (t, u.as_nominal(c), d) {
                    push(&mut ix.abox_by_sb, (s, b), id);
                    push(&mut ix.abox_by_sc, (s, e), id);
                }
            }
            Fact::GciDiaRight(t, c, s, d) => {
                push(&mut ix.dia_by_outer, (t, c), id);
                push(&mut ix.dia_by_inner, (s, d), id);
            }
            Fact::GciExRight(s, c, r, d) => {
                push(&mut ix.exr_by_lhs, (s, c), id);
                push(&mut ix.exr_by_filler, (s, d), id);
                push(&mut ix.exr_by_role, (s, r), id);
                push(&mut ix.exr_by_role_filler, (s, r, d), id);
            }
            Fact::GciExLeft(s, r, c, _) => push(&mut ix.exl_by_role_filler, (s, r, c), id),
            Fact::GciConLeft(s, c1, c2, _) => push(&mut ix.con_by_pair, (s, c1, c2), id),
            Fact::RoleAssertion(s, r, a, b) => {
                push(&mut ix.ra_by_role, (s, r), id);
                push(&mut ix.ra_by_subj, (s, a), id);
                push(&mut ix.ra_by_obj, (s, b), id);
            }
        }
    }

    fn join(&self, id: FactId, fact: Fact, out: &mut Vec<Derivation>) {
        if let Some(s) = fact.outer() {
            for &g in get(&self.idx.sh_by_rhs, &s) {
                if let Fact::Sharper(x, _) = self.store.fact(g) {
                    out.push(d(fact.with_outer(x), RuleId::S3(fact.shape()), smallvec![id, g]));
                }
            }
        }
        match fact {
            Fact::Sharper(s, s1) => self.join_sharper(id, s, s1, out),
            Fact::SharperIntersection(s1, s2, t) => {
                for &g in get(&self.idx.sh_by_rhs, &s1) {
                    let Fact::Sharper(x, _) = self.store.fact(g) else { continue };
                    if let Some(h) = self.store.id_of(&Fact::Sharper(x, s2)) {
                        out.push(d(Fact::Sharper(x, t), RuleId::S2, smallvec![g, h, id]));
                    }
                }
            }
            Fact::GciNested(t, c, s, dd, e) => self.join_nested(id, (t, c, s, dd, e), out),
            Fact::GciDiaRight(t, c, s, dd) => self.join_dia(id, (t, c, s, dd), out),
            Fact::GciExRight(s, c, r, dd) => self.join_exr(id, (s, c, r, dd), out),
            Fact::GciExLeft(s, r, c, dd) => {
                for &g in get(&self.idx.exr_by_role_filler, &(s, r, c)) {
                    if let Fact::GciExRight(_, c0, _, _) = self.store.fact(g) {
                        out.push(d(Fact::GciNested(STAR, TOP, s, c0, dd), RuleId::E3, smallvec![g, id]));
                    }
                }
                let selfc = self.store.universe().self_concept(r);
                out.push(d(Fact::GciConLeft(s, selfc, c, dd), RuleId::L3, smallvec![id]));
            }
            Fact::GciConLeft(s, c1, c2, dd) => {
                for &g in get(&self.idx.n_by_se, &(s, c1)) {
                    let Fact::GciNested(t, b, _, c, _) = self.store.fact(g) else { continue };
                    if let Some(h) = self.store.id_of(&Fact::GciNested(t, b, s, c, c2)) {
                        out.push(d(Fact::GciNested(t, b, s, c, dd), RuleId::E4, smallvec![g, h, id]));
                    }
                }
            }
            Fact::Ria2(s, r, r1) => self.join_ria2(id, (s, r, r1), out),
            Fact::Ria3(s, r1, r2, r) => self.join_ria3(id, (s, r1, r2, r), out),
            Fact::RoleAssertion(s, r, a, b) => self.join_ra(id, (s, r, a, b), out),
        }
    }

    fn join_sharper(&self, id: FactId, s: Sp, s1: Sp, out: &mut Vec<Derivation>) {
        let (st, ix) = (&self.store, &self.idx);
        for &g in get(&ix.sh_by_lhs, &s1) {
            if let Fact::Sharper(_, s2) = st.fact(g) {
                out.push(d(Fact::Sharper(s, s2), RuleId::S1, smallvec![id, g]));
            }
        }
        for &g in get(&ix.sh_by_rhs, &s) {
            if let Fact::Sharper(x, _) = st.fact(g) {
                out.push(d(Fact::Sharper(x, s1), RuleId::S1, smallvec![g, id]));
            }
        }
        for &g in get(&ix.sh_by_lhs, &s) {
            let Fact::Sharper(_, s2) = st.fact(g) else { continue };
            for &h in get(&ix.shi_by_pair, &(s1, s2)) {
                if let Fact::SharperIntersection(_, _, t) = st.fact(h) {
                    out.push(d(Fact::Sharper(s, t), RuleId::S2, smallvec![id, g, h]));
                }
            }
            for &h in get(&ix.shi_by_pair, &(s2, s1)) {
                if let Fact::SharperIntersection(_, _, t) = st.fact(h) {
                    out.push(d(Fact::Sharper(s, t), RuleId::S2, smallvec![g, id, h]));
                }
            }
        }
        for &g in get(&ix.outer, &s1) {
            let xi = st.fact(g);
            out.push(d(xi.with_outer(s), RuleId::S3(xi.shape()), smallvec![g, id]));
        }
        for &g in get(&ix.n_by_inner, &s1) {
            if let Fact::GciNested(t, c, _, dd, e) = st.fact(g) {
                out.push(d(Fact::GciNested(t, c, s, dd, e), RuleId::S4, smallvec![g, id]));
            }
        }
    }

    fn join_nested(&self, id: FactId, (t, c, s, dd, e): (Sp, Cn, Sp, Cn, Cn), out: &mut Vec<Derivation>) {
        use Fact::*;
        let (st, ix) = (&self.store, &self.idx);
        let u = st.universe();
        let tbox = t == STAR && c == TOP;
        let nominal = u.as_nominal(c);
        let one = || smallvec![id];

        for &g in get(&ix.sh_by_rhs, &s) {
            if let Sharper(x, _) = st.fact(g) {
                out.push(d(GciNested(t, c, x, dd, e), RuleId::S4, smallvec![id, g]));
            }
        }
        if t == s && dd == TOP {
            out.push(d(GciNested(STAR, TOP, s, c, e), RuleId::I1, one()));
        }
        if c == TOP && t != STAR {
            out.push(d(GciNested(STAR, TOP, s, dd, e), RuleId::I2, one()));
        }
        if c == TOP && u.as_nominal(dd).is_some() {
            out.push(d(GciNested(STAR, dd, s, TOP, e), RuleId::A9, one()));
        }
        // C.1
        for &g in get(&ix.n_by_tcsd, &(t, c, s, e)) {
            if let GciNested(.., e2) = st.fact(g) {
                out.push(d(GciNested(t, c, s, dd, e2), RuleId::C1, smallvec![id, g]));
            }
        }
        for &g in get(&ix.n_by_tcse, &(t, c, s, dd)) {
            if let GciNested(_, _, _, d0, _) = st.fact(g) {
                out.push(d(GciNested(t, c, s, d0, e), RuleId::C1, smallvec![g, id]));
            }
        }
        // C.2
        if tbox {
            for &g in get(&ix.n_by_outer, &(s, e)) {
                if let GciNested(_, _, s2, d2, e2) = st.fact(g) {
                    out.push(d(GciNested(s, dd, s2, d2, e2), RuleId::C2, smallvec![id, g]));
                }
            }
        }
        for &g in get(&ix.tbox_by_se, &(t, c)) {
            if let GciNested(_, _, _, b, _) = st.fact(g) {
                out.push(d(GciNested(t, b, s, dd, e), RuleId::C2, smallvec![g, id]));
            }
        }
        // C.3
        if tbox {
            for &g in get(&ix.dia_by_outer, &(s, e)) {
                if let GciDiaRight(_, _, s2, e2) = st.fact(g) {
                    out.push(d(GciDiaRight(s, dd, s2, e2), RuleId::C3, smallvec![id, g]));
                }
            }
        }
        // C.4
        if let Some(h) = st.id_of(&GciDiaRight(t, c, s, dd)) {
            out.push(d(GciDiaRight(t, c, s, e), RuleId::C4, smallvec![h, id]));
        }
        // F.1, F.2
        if dd == TOP {
            for &g in get(&ix.n_by_outer, &(s, e)) {
                if let GciNested(_, _, s2, e2, f2) = st.fact(g) {
                    out.push(d(GciNested(t, c, s2, e2, f2), RuleId::F1, smallvec![id, g]));
                }
            }
            for &g in get(&ix.dia_by_outer, &(s, e)) {
                if let GciDiaRight(_, _, s2, e2) = st.fact(g) {
                    out.push(d(GciDiaRight(t, c, s2, e2), RuleId::F2, smallvec![id, g]));
                }
            }
        }
        for &g in get(&ix.n_inner_top, &(t, c)) {
            if let GciNested(t0, c0, ..) = st.fact(g) {
                out.push(d(GciNested(t0, c0, s, dd, e), RuleId::F1, smallvec![g, id]));
            }
        }
        // F.3
        for &g in get(&ix.dia_by_inner, &(t, c)) {
            if let GciDiaRight(t0, c0, ..) = st.fact(g) {
                out.push(d(GciNested(t0, c0, s, dd, e), RuleId::F3, smallvec![g, id]));
            }
        }
        // E.1
        if tbox {
            for &g in get(&ix.exr_by_filler, &(s, dd)) {
                let GciExRight(_, c0, r, _) = st.fact(g) else { continue };
                for &h in get(&ix.ria2_by_lhs, &(s, r)) {
                    if let Ria2(_, _, r1) = st.fact(h) {
                        out.push(d(GciExRight(s, c0, r1, e), RuleId::E1, smallvec![g, id, h]));
                    }
                }
            }
        }
        // E.4
        for &g in get(&ix.n_by_tcsd, &(t, c, s, dd)) {
            let GciNested(.., e2) = st.fact(g) else { continue };
            for &h in get(&ix.con_by_pair, &(s, e, e2)) {
                if let GciConLeft(.., d2) = st.fact(h) {
                    out.push(d(GciNested(t, c, s, dd, d2), RuleId::E4, smallvec![id, g, h]));
                }
            }
            for &h in get(&ix.con_by_pair, &(s, e2, e)) {
                if let GciConLeft(.., d2) = st.fact(h) {
                    out.push(d(GciNested(t, c, s, dd, d2), RuleId::E4, smallvec![g, id, h]));
                }
            }
        }
        // A.1 - A.3
        if tbox {
            for a in u.individual_ids() {
                out.push(d(GciNested(STAR, u.nominal(a), s, dd, e), RuleId::A1, one()));
            }
        }
        if let Some(b) = nominal {
            if dd == TOP {
                out.push(d(GciNested(STAR, TOP, s, c, e), RuleId::A2, one()));
            }
            if t != STAR {
                out.push(d(GciNested(STAR, c, s, dd, e), RuleId::A3, one()));
            }
            if t == STAR && dd == TOP {
                // A.6, A.8
                for &g in get(&ix.ra_by_obj, &(s, b)) {
                    let RoleAssertion(_, r1, a, _) = st.fact(g) else { continue };
                    let na = u.nominal(a);
                    out.push(d(GciExRight(s, na, r1, e), RuleId::A6, smallvec![g, id]));
                    for &h in get(&ix.exr_by_lhs, &(s, e)) {
                        let GciExRight(_, _, r2, c2) = st.fact(h) else { continue };
                        for &k in get(&ix.ria3_by_pair, &(s, r1, r2)) {
                            if let Ria3(.., r) = st.fact(k) {
                                out.push(d(GciExRight(s, na, r, c2), RuleId::A8, smallvec![g, id, h, k]));
                            }
                        }
                    }
                }
            }
            if dd == TOP {
                if let Some(r) = u.as_self(e) {
                    out.push(d(RoleAssertion(s, r, b, b), RuleId::L1, one()));
                }
                if e == BOT {
                    out.push(d(REFUTATION, RuleId::B4, one()));
                }
            }
        }
        if c == TOP {
            if let Some(r) = u.as_self(e) {
                out.push(d(GciExRight(s, dd, r, dd), RuleId::L2, one()));
            }
        }
        if dd == TOP && e == BOT {
            out.push(d(GciNested(STAR, TOP, t, c, BOT), RuleId::B2, one()));
        }
    }

    fn join_dia(&self, id: FactId, (t, c, s, dd): (Sp, Cn, Sp, Cn), out: &mut Vec<Derivation>) {
        use Fact::*;
        let (st, ix) = (&self.store, &self.idx);
        for &g in get(&ix.tbox_by_se, &(t, c)) {
            if let GciNested(_, _, _, c0, _) = st.fact(g) {
                out.push(d(GciDiaRight(t, c0, s, dd), RuleId::C3, smallvec![g, id]));
            }
        }
        for &g in get(&ix.n_by_tcsd, &(t, c, s, dd)) {
            if let GciNested(.., e) = st.fact(g) {
                out.push(d(GciDiaRight(t, c, s, e), RuleId::C4, smallvec![id, g]));
            }
        }
        for &g in get(&ix.n_inner_top, &(t, c)) {
            if let GciNested(t0, c0, ..) = st.fact(g) {
                out.push(d(GciDiaRight(t0, c0, s, dd), RuleId::F2, smallvec![g, id]));
            }
        }
        for &g in get(&ix.n_by_outer, &(s, dd)) {
            if let GciNested(_, _, s2, e, f2) = st.fact(g) {
                out.push(d(GciNested(t, c, s2, e, f2), RuleId::F3, smallvec![id, g]));
            }
        }
        for &g in get(&ix.dia_by_outer, &(s, dd)) {
            if let GciDiaRight(_, _, s2, e) = st.fact(g) {
                out.push(d(GciDiaRight(t, c, s2, e), RuleId::F4, smallvec![id, g]));
            }
        }
        for &g in get(&ix.dia_by_inner, &(t, c)) {
            if let GciDiaRight(t0, c0, ..) = st.fact(g) {
                out.push(d(GciDiaRight(t0, c0, s, dd), RuleId::F4, smallvec![g, id]));
            }
        }
        if dd == BOT {
            out.push(d(GciNested(STAR, TOP, t, c, BOT), RuleId::B3, smallvec![id]));
        }
    }

    fn join_exr(&self, id: FactId, (s, c, r, dd): (Sp, Cn, Rl, Cn), out: &mut Vec<Derivation>) {
        use Fact::*;
        let (st, ix) = (&self.store, &self.idx);
        let u = st.universe();
        for &g in get(&ix.tbox_by_sd, &(s, dd)) {
            let GciNested(.., e) = st.fact(g) else { continue };
            for &h in get(&ix.ria2_by_lhs, &(s, r)) {
                if let Ria2(_, _, r1) = st.fact(h) {
                    out.push(d(GciExRight(s, c, r1, e), RuleId::E1, smallvec![id, g, h]));
                }
            }
        }
        for &g in get(&ix.exr_by_lhs, &(s, dd)) {
            let GciExRight(_, _, r2, e) = st.fact(g) else { continue };
            for &h in get(&ix.ria3_by_pair, &(s, r, r2)) {
                if let Ria3(.., r1) = st.fact(h) {
                    out.push(d(GciExRight(s, c, r1, e), RuleId::E2, smallvec![id, g, h]));
                }
            }
        }
        for &g in get(&ix.exr_by_filler, &(s, c)) {
            let GciExRight(_, c0, r1, _) = st.fact(g) else { continue };
            for &h in get(&ix.ria3_by_pair, &(s, r1, r)) {
                if let Ria3(.., r2) = st.fact(h) {
                    out.push(d(GciExRight(s, c0, r2, dd), RuleId::E2, smallvec![g, id, h]));
                }
            }
        }
        for &g in get(&ix.exl_by_role_filler, &(s, r, dd)) {
            if let GciExLeft(.., f2) = st.fact(g) {
                out.push(d(GciNested(STAR, TOP, s, c, f2), RuleId::E3, smallvec![id, g]));
            }
        }
        if let Some(b) = u.as_nominal(c) {
            for &g in get(&ix.ra_by_obj, &(s, b)) {
                let RoleAssertion(_, r1, a, _) = st.fact(g) else { continue };
                for &h in get(&ix.ria3_by_pair, &(s, r1, r)) {
                    if let Ria3(.., r2) = st.fact(h) {
                        out.push(d(GciExRight(s, u.nominal(a), r2, dd), RuleId::A7, smallvec![g, id, h]));
                    }
                }
            }
        }
        for &g in get(&ix.abox_by_sc, &(s, c)) {
            let GciNested(_, nb, ..) = st.fact(g) else { continue };
            let Some(b) = u.as_nominal(nb) else { continue };
            for &h in get(&ix.ra_by_obj, &(s, b)) {
                let RoleAssertion(_, r1, a, _) = st.fact(h) else { continue };
                for &k in get(&ix.ria3_by_pair, &(s, r1, r)) {
                    if let Ria3(.., r2) = st.fact(k) {
                        out.push(d(GciExRight(s, u.nominal(a), r2, dd), RuleId::A8, smallvec![h, g, id, k]));
                    }
                }
            }
        }
        if dd == BOT {
            out.push(d(GciNested(STAR, TOP, s, c, BOT), RuleId::B1, smallvec![id]));
        }
    }

    fn join_ria2(&self, id: FactId, (s, r, r1): (Sp, Rl, Rl), out: &mut Vec<Derivation>) {
        use Fact::*;
        let (st, ix) = (&self.store, &self.idx);
        let u = st.universe();
        for &g in get(&ix.ria2_by_lhs, &(s, r1)) {
            if let Ria2(_, _, r2) = st.fact(g) {
                out.push(d(Ria2(s, r, r2), RuleId::R1, smallvec![id, g]));
            }
        }
        for &g in get(&ix.ria2_by_rhs, &(s, r)) {
            if let Ria2(_, r0, _) = st.fact(g) {
                out.push(d(Ria2(s, r0, r1), RuleId::R1, smallvec![g, id]));
            }
        }
        for &g in get(&ix.exr_by_role, &(s, r)) {
            let GciExRight(_, c, _, dd) = st.fact(g) else { continue };
            for &h in get(&ix.tbox_by_sd, &(s, dd)) {
                if let GciNested(.., e) = st.fact(h) {
                    out.push(d(GciExRight(s, c, r1, e), RuleId::E1, smallvec![g, h, id]));
                }
            }
        }
        for &g in get(&ix.ra_by_role, &(s, r)) {
            if let RoleAssertion(_, _, a, b) = st.fact(g) {
                out.push(d(RoleAssertion(s, r1, a, b), RuleId::A4, smallvec![g, id]));
            }
        }
        out.push(d(GciNested(STAR, TOP, s, u.self_concept(r), u.self_concept(r1)), RuleId::L5, smallvec![id]));
    }

    fn join_ria3(&self, id: FactId, (s, r1, r2, r): (Sp, Rl, Rl, Rl), out: &mut Vec<Derivation>) {
        use Fact::*;
        let (st, ix) = (&self.store, &self.idx);
        let u = st.universe();
        for &g in get(&ix.exr_by_role, &(s, r1)) {
            let GciExRight(_, c, _, dd) = st.fact(g) else { continue };
            for &h in get(&ix.exr_by_lhs, &(s, dd)) {
                if let GciExRight(_, _, rr, e) = st.fact(h) {
                    if rr == r2 {
                        out.push(d(GciExRight(s, c, r, e), RuleId::E2, smallvec![g, h, id]));
                    }
                }
            }
        }
        for &g in get(&ix.ra_by_role, &(s, r1)) {
            let RoleAssertion(_, _, a, b) = st.fact(g) else { continue };
            for &h in get(&ix.ra_by_subj, &(s, b)) {
                if let RoleAssertion(_, rr, _, c) = st.fact(h) {
                    if rr == r2 {
                        out.push(d(RoleAssertion(s, r, a, c), RuleId::A5, smallvec![g, h, id]));
                    }
                }
            }
            let na = u.nominal(a);
            for &h in get(&ix.exr_by_lhs, &(s, u.nominal(b))) {
                if let GciExRight(_, _, rr, c) = st.fact(h) {
                    if rr == r2 {
                        out.push(d(GciExRight(s, na, r, c), RuleId::A7, smallvec![g, h, id]));
                    }
                }
            }
            for &h in get(&ix.abox_by_sb, &(s, b)) {
                let GciNested(.., bc) = st.fact(h) else { continue };
                for &k in get(&ix.exr_by_lhs, &(s, bc)) {
                    if let GciExRight(_, _, rr, c) = st.fact(k) {
                        if rr == r2 {
                            out.push(d(GciExRight(s, na, r, c), RuleId::A8, smallvec![g, h, k, id]));
                        }
                    }
                }
            }
        }
        let sc = |x| u.self_concept(x);
        out.push(d(GciConLeft(s, sc(r1), sc(r2), sc(r)), RuleId::L6, smallvec![id]));
    }

    fn join_ra(&self, id: FactId, (s, r, a, b): (Sp, Rl, Ind, Ind), out: &mut Vec<Derivation>) {
        use Fact::*;
        let (st, ix) = (&self.store, &self.idx);
        let u = st.universe();
        let na = u.nominal(a);
        for &g in get(&ix.ria2_by_lhs, &(s, r)) {
            if let Ria2(_, _, r1) = st.fact(g) {
                out.push(d(RoleAssertion(s, r1, a, b), RuleId::A4, smallvec![id, g]));
            }
        }
        for &g in get(&ix.ra_by_subj, &(s, b)) {
            let RoleAssertion(_, r2, _, c) = st.fact(g) else { continue };
            for &h in get(&ix.ria3_by_pair, &(s, r, r2)) {
                if let Ria3(.., r1) = st.fact(h) {
                    out.push(d(RoleAssertion(s, r1, a, c), RuleId::A5, smallvec![id, g, h]));
                }
            }
        }
        for &g in get(&ix.ra_by_obj, &(s, a)) {
            let RoleAssertion(_, r0, a0, _) = st.fact(g) else { continue };
            for &h in get(&ix.ria3_by_pair, &(s, r0, r)) {
                if let Ria3(.., r1) = st.fact(h) {
                    out.push(d(RoleAssertion(s, r1, a0, b), RuleId::A5, smallvec![g, id, h]));
                }
            }
        }
        for &g in get(&ix.abox_by_sb, &(s, b)) {
            let GciNested(.., bc) = st.fact(g) else { continue };
            out.push(d(GciExRight(s, na, r, bc), RuleId::A6, smallvec![id, g]));
            for &h in get(&ix.exr_by_lhs, &(s, bc)) {
                let GciExRight(_, _, r2, c) = st.fact(h) else { continue };
                for &k in get(&ix.ria3_by_pair, &(s, r, r2)) {
                    if let Ria3(.., r1) = st.fact(k) {
                        out.push(d(GciExRight(s, na, r1, c), RuleId::A8, smallvec![id, g, h, k]));
                    }
                }
            }
        }
        for &g in get(&ix.exr_by_lhs, &(s, u.nominal(b))) {
            let GciExRight(_, _, r2, c) = st.fact(g) else { continue };
            for &h in get(&ix.ria3_by_pair, &(s, r, r2)) {
                if let Ria3(.., r1) = st.fact(h) {
                    out.push(d(GciExRight(s, na, r1, c), RuleId::A7, smallvec![id, g, h]));
                }
            }
        }
        if a == b {
            out.push(d(GciNested(STAR, na, s, TOP, u.self_concept(r)), RuleId::L4, smallvec![id]));
        }
    }
}

fn d(fact: Fact, rule: RuleId, premises: SmallVec<[FactId; 4]>) -> Derivation {
    Derivation { fact, rule, premises }
}
