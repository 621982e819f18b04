//! Semi-naive bottom-up evaluator for programs accepted by
//! [`spel_core::datalog::parse_program`].

use std::collections::{BTreeMap, BTreeSet};

use rustc_hash::FxHashMap;
use spel_core::datalog::{Program, Term};

#[derive(Default)]
struct Relation {
    tuples: Vec<Box<[u32]>>,
    set: rustc_hash::FxHashSet<Box<[u32]>>,
    indexes: FxHashMap<u64, FxHashMap<Box<[u32]>, Vec<u32>>>,
}

fn key(t: &[u32], mask: u64) -> Box<[u32]> {
    t.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect()
}

impl Relation {
    fn insert(&mut self, t: Box<[u32]>) -> bool {
        if self.set.contains(&t) {
            return false;
        }
        let id = self.tuples.len() as u32;
        for (&mask, idx) in self.indexes.iter_mut() {
            idx.entry(key(&t, mask)).or_default().push(id);
        }
        self.set.insert(t.clone());
        self.tuples.push(t);
        true
    }

    fn ensure_index(&mut self, mask: u64) {
        if mask == 0 || self.indexes.contains_key(&mask) {
            return;
        }
        let mut idx: FxHashMap<Box<[u32]>, Vec<u32>> = FxHashMap::default();
        for (i, t) in self.tuples.iter().enumerate() {
            idx.entry(key(t, mask)).or_default().push(i as u32);
        }
        self.indexes.insert(mask, idx);
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Var(usize),
    Const(u32),
    Any,
}

struct CAtom {
    pred: usize,
    slots: Vec<Slot>,
}

struct CRule {
    head: CAtom,
    body: Vec<CAtom>,
    vars: usize,
}

/// The least model of a program.
pub struct Database {
    names: Vec<String>,
    preds: Vec<String>,
    relations: Vec<Relation>,
}

impl Database {
    /// Tuples of `pred`, as strings.
    pub fn relation(&self, pred: &str) -> BTreeSet<Vec<String>> {
        let Some(p) = self.preds.iter().position(|x| x == pred) else { return BTreeSet::new() };
        self.relations[p]
            .tuples
            .iter()
            .map(|t| t.iter().map(|&c| self.names[c as usize].clone()).collect())
            .collect()
    }

    pub fn contains(&self, pred: &str, args: &[&str]) -> bool {
        let Some(p) = self.preds.iter().position(|x| x == pred) else { return false };
        let Some(t) = args.iter().map(|a| self.names.iter().position(|n| n == a).map(|i| i as u32)).collect::<Option<Box<[u32]>>>()
        else {
            return false;
        };
        self.relations[p].set.contains(&t)
    }

    pub fn len(&self) -> usize {
        self.relations.iter().map(|r| r.tuples.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

struct Interner {
    ids: BTreeMap<String, u32>,
    names: Vec<String>,
}

impl Interner {
    fn get(&mut self, s: &str) -> u32 {
        if let Some(&i) = self.ids.get(s) {
            return i;
        }
        let i = self.names.len() as u32;
        self.ids.insert(s.to_string(), i);
        self.names.push(s.to_string());
        i
    }
}

pub fn evaluate(prog: &Program) -> Database {
    let preds: Vec<String> = prog.decls.iter().map(|(n, _)| n.clone()).collect();
    let pred_id = |p: &str| preds.iter().position(|x| x == p).expect("checked program");
    let mut interner = Interner { ids: BTreeMap::new(), names: Vec::new() };
    let mut relations: Vec<Relation> = preds.iter().map(|_| Relation::default()).collect();

    let rules: Vec<CRule> = prog
        .rules
        .iter()
        .map(|r| {
            let mut vars: BTreeMap<String, usize> = BTreeMap::new();
            let mut compile = |a: &spel_core::datalog::Atom, interner: &mut Interner| CAtom {
                pred: pred_id(&a.pred),
                slots: a
                    .args
                    .iter()
                    .map(|t| match t {
                        Term::Var(v) => {
                            let n = vars.len();
                            Slot::Var(*vars.entry(v.clone()).or_insert(n))
                        }
                        Term::Const(c) => Slot::Const(interner.get(c)),
                        Term::Wildcard => Slot::Any,
                    })
                    .collect(),
            };
            let body: Vec<CAtom> = r.body.iter().map(|a| compile(a, &mut interner)).collect();
            let head = compile(&r.head, &mut interner);
            CRule { head, body, vars: vars.len() }
        })
        .collect();

    for f in &prog.facts {
        let t: Box<[u32]> = f
            .args
            .iter()
            .map(|a| match a {
                Term::Const(c) => interner.get(c),
                _ => unreachable!("facts are ground"),
            })
            .collect();
        relations[pred_id(&f.pred)].insert(t);
    }

    // Round boundaries: tuples[..old] are stable, tuples[old..cur] are the delta.
    let mut old: Vec<usize> = vec![0; preds.len()];
    let mut cur: Vec<usize> = relations.iter().map(|r| r.tuples.len()).collect();
    loop {
        let mut new: Vec<(usize, Box<[u32]>)> = Vec::new();
        for rule in &rules {
            if rule.body.is_empty() {
                continue;
            }
            for delta_pos in 0..rule.body.len() {
                let d = rule.body[delta_pos].pred;
                if old[d] == cur[d] {
                    continue;
                }
                let mut binding = vec![None; rule.vars];
                join(rule, 0, delta_pos, &old, &cur, &mut relations, &mut binding, &mut new);
            }
        }
        old.clone_from(&cur);
        for (p, t) in new {
            relations[p].insert(t);
        }
        cur = relations.iter().map(|r| r.tuples.len()).collect();
        if cur == old {
            break;
        }
    }
    Database { names: interner.names, preds, relations }
}

#[allow(clippy::too_many_arguments)]
fn join(
    rule: &CRule,
    i: usize,
    delta_pos: usize,
    old: &[usize],
    cur: &[usize],
    rels: &mut [Relation],
    binding: &mut Vec<Option<u32>>,
    out: &mut Vec<(usize, Box<[u32]>)>,
) {
    if i == rule.body.len() {
        let t: Box<[u32]> = rule
            .head
            .slots
            .iter()
            .map(|s| match *s {
                Slot::Var(v) => binding[v].expect("safe rule"),
                Slot::Const(c) => c,
                Slot::Any => unreachable!("no wildcard in heads"),
            })
            .collect();
        if !rels[rule.head.pred].set.contains(&t) {
            out.push((rule.head.pred, t));
        }
        return;
    }
    let atom = &rule.body[i];
    let p = atom.pred;
    let (lo, hi) = if i < delta_pos {
        (0, old[p])
    } else if i == delta_pos {
        (old[p], cur[p])
    } else {
        (0, cur[p])
    };
    if lo >= hi {
        return;
    }
    let mut mask = 0u64;
    let mut k = Vec::new();
    for (j, s) in atom.slots.iter().enumerate() {
        let v = match *s {
            Slot::Const(c) => Some(c),
            Slot::Var(v) => binding[v],
            Slot::Any => None,
        };
        if let Some(v) = v {
            mask |= 1 << j;
            k.push(v);
        }
    }
    let candidates: Vec<u32> = if mask == 0 {
        (lo as u32..hi as u32).collect()
    } else {
        rels[p].ensure_index(mask);
        match rels[p].indexes[&mask].get(k.as_slice()) {
            Some(ids) => ids.iter().copied().filter(|&id| (lo..hi).contains(&(id as usize))).collect(),
            None => return,
        }
    };
    for id in candidates {
        let t = rels[p].tuples[id as usize].clone();
        let mut newly = Vec::new();
        let mut ok = true;
        for (j, s) in atom.slots.iter().enumerate() {
            if let Slot::Var(v) = *s {
                match binding[v] {
                    Some(b) if b != t[j] => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        binding[v] = Some(t[j]);
                        newly.push(v);
                    }
                }
            }
        }
        if ok {
            join(rule, i + 1, delta_pos, old, cur, rels, binding, out);
        }
        for v in newly {
            binding[v] = None;
        }
    }
}
