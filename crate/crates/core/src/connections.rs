//! The connection relation on nonzero roots.
//!
//! A chain `α₁, …, α_k` of roots connects `α` to `β` when `α₁` lies in the
//! twist orbit of `α`, every twisted partial sum `σ₁ = α₁`,
//! `σ_{i+1} = (σ_i + α_{i+1})∘φ⁻¹` up to `σ_{k-1}` stays inside the root
//! system, and `σ_k` lands on `±β∘φ^{-m}` for some `m`. Because the twist
//! action permutes the finite root system, orbits are plain cycles and the
//! search space is finite: breadth-first search over roots as states gives
//! minimal-length witnesses, with ties broken by canonical root order.

use crate::rootspace::{Root, RootSystem};
use std::collections::BTreeMap;
use std::collections::VecDeque;
use thiserror::Error;

/// A verified certificate that `α` is connected to `β`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConnectionWitness {
    /// The chain `α₁, …, α_k`.
    pub chain: Vec<Root>,
    /// The twisted partial sums `σ₁, …, σ_k`.
    pub partial_sums: Vec<Root>,
    /// `n` with `α₁ = α∘φ^{-n}`.
    pub start_exponent: usize,
    /// Sign `ε` of the endpoint.
    pub end_sign: i8,
    /// `m` with `σ_k = ε·β∘φ^{-m}`.
    pub end_exponent: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Connection {
    Connected(ConnectionWitness),
    NotConnected,
}

impl Connection {
    pub fn witness(&self) -> Option<&ConnectionWitness> {
        match self {
            Connection::Connected(w) => Some(w),
            Connection::NotConnected => None,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.witness().is_some()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConnectionError {
    #[error("root {0} is not in the root system")]
    UnknownRoot(Root),
}

/// The cycle `α, α∘φ⁻¹, α∘φ⁻², …` until repetition. The twist action
/// permutes the root system, so this equals the full two-sided orbit.
pub fn phi_orbit(rs: &RootSystem, root: &Root) -> Result<Vec<Root>, ConnectionError> {
    if !rs.contains_root(root) {
        return Err(ConnectionError::UnknownRoot(root.clone()));
    }
    let mut orbit = vec![root.clone()];
    loop {
        let next = rs.apply_phi_inv(orbit.last().expect("orbit is nonempty"));
        if next == orbit[0] {
            return Ok(orbit);
        }
        if !rs.contains_root(&next) {
            return Err(ConnectionError::UnknownRoot(next));
        }
        orbit.push(next);
    }
}

/// Endpoint table: the values `±β∘φ^{-m}` with their sign and exponent.
/// Negated orbit values are legal endpoints even when they lie outside the
/// root system (possible only in non-symmetric systems). On collisions the
/// positive sign and the smaller exponent win.
fn accept_table(
    rs: &RootSystem,
    to: &Root,
) -> Result<BTreeMap<Root, (i8, usize)>, ConnectionError> {
    let orbit = phi_orbit(rs, to)?;
    let mut table = BTreeMap::new();
    for (m, r) in orbit.iter().enumerate() {
        table.entry(r.clone()).or_insert((1, m));
    }
    for (m, r) in orbit.iter().enumerate() {
        table.entry(r.negated()).or_insert((-1, m));
    }
    Ok(table)
}

/// Searches for a connection from `from` to `to`, allowing any start
/// exponent along the orbit of `from`.
pub fn are_connected(
    rs: &RootSystem,
    from: &Root,
    to: &Root,
) -> Result<Connection, ConnectionError> {
    let starts: Vec<(usize, Root)> = phi_orbit(rs, from)?.into_iter().enumerate().collect();
    search(rs, &starts, to)
}

/// Searches with the start pinned to `from∘φ^{-start_exponent}`; used to
/// exercise the shift property of connections.
pub fn are_connected_from(
    rs: &RootSystem,
    from: &Root,
    start_exponent: usize,
    to: &Root,
) -> Result<Connection, ConnectionError> {
    let orbit = phi_orbit(rs, from)?;
    let pinned = orbit[start_exponent % orbit.len()].clone();
    search(rs, &[(start_exponent, pinned)], to)
}

fn search(
    rs: &RootSystem,
    starts: &[(usize, Root)],
    to: &Root,
) -> Result<Connection, ConnectionError> {
    let accept = accept_table(rs, to)?;
    let all_roots: Vec<Root> = rs.roots().into_iter().cloned().collect();
    let index: BTreeMap<&Root, usize> = all_roots.iter().zip(0..).collect();

    // chain length 1: start doubles as endpoint
    for (n, start) in starts {
        if let Some(&(sign, m)) = accept.get(start) {
            return Ok(Connection::Connected(ConnectionWitness {
                chain: vec![start.clone()],
                partial_sums: vec![start.clone()],
                start_exponent: *n,
                end_sign: sign,
                end_exponent: m,
            }));
        }
    }

    // breadth-first over partial sums inside the root system
    let mut parent: Vec<Option<(usize, Root)>> = vec![None; all_roots.len()];
    let mut seen = vec![false; all_roots.len()];
    let mut start_of = vec![0usize; all_roots.len()];
    let mut queue = VecDeque::new();
    for (n, start) in starts {
        let i = index[start];
        if !seen[i] {
            seen[i] = true;
            start_of[i] = *n;
            queue.push_back(i);
        }
    }
    while let Some(current) = queue.pop_front() {
        for gamma in &all_roots {
            let target = rs.apply_phi_inv(&all_roots[current].plus(gamma));
            if let Some(&(sign, m)) = accept.get(&target) {
                let (mut chain, mut sums, n) = backtrack(&all_roots, &parent, &start_of, current);
                chain.push(gamma.clone());
                sums.push(target);
                return Ok(Connection::Connected(ConnectionWitness {
                    chain,
                    partial_sums: sums,
                    start_exponent: n,
                    end_sign: sign,
                    end_exponent: m,
                }));
            }
            if let Some(&i) = index.get(&target) {
                if !seen[i] {
                    seen[i] = true;
                    parent[i] = Some((current, gamma.clone()));
                    queue.push_back(i);
                }
            }
        }
    }
    Ok(Connection::NotConnected)
}

fn backtrack(
    all_roots: &[Root],
    parent: &[Option<(usize, Root)>],
    start_of: &[usize],
    end: usize,
) -> (Vec<Root>, Vec<Root>, usize) {
    let mut sums = vec![all_roots[end].clone()];
    let mut chain = Vec::new();
    let mut cursor = end;
    while let Some((prev, gamma)) = &parent[cursor] {
        chain.push(gamma.clone());
        cursor = *prev;
        sums.push(all_roots[cursor].clone());
    }
    chain.push(all_roots[cursor].clone()); // α₁ itself
    chain.reverse();
    sums.reverse();
    (chain, sums, start_of[cursor])
}

/// Re-derives every invariant of a witness by direct evaluation, without
/// reusing any search state.
pub fn validate_witness(
    rs: &RootSystem,
    witness: &ConnectionWitness,
    from: &Root,
    to: &Root,
) -> bool {
    let k = witness.chain.len();
    if k == 0 || witness.partial_sums.len() != k {
        return false;
    }
    if witness.end_sign != 1 && witness.end_sign != -1 {
        return false;
    }
    // every chain element is a root
    if witness.chain.iter().any(|r| !rs.contains_root(r)) {
        return false;
    }
    // the recurrence σ₁ = α₁, σ_{i+1} = (σ_i + α_{i+1})∘φ⁻¹
    if witness.partial_sums[0] != witness.chain[0] {
        return false;
    }
    for i in 1..k {
        let expected = rs.apply_phi_inv(&witness.partial_sums[i - 1].plus(&witness.chain[i]));
        if witness.partial_sums[i] != expected {
            return false;
        }
    }
    // intermediate sums stay inside the root system
    if witness.partial_sums[..k - 1]
        .iter()
        .any(|s| !rs.contains_root(s))
    {
        return false;
    }
    // α₁ = α∘φ^{-n}
    let mut start = from.clone();
    for _ in 0..witness.start_exponent {
        start = rs.apply_phi_inv(&start);
    }
    if witness.chain[0] != start {
        return false;
    }
    // σ_k = ε·β∘φ^{-m}
    let mut end = to.clone();
    for _ in 0..witness.end_exponent {
        end = rs.apply_phi_inv(&end);
    }
    if witness.end_sign == -1 {
        end = end.negated();
    }
    witness.partial_sums[k - 1] == end
}

/// One connection class: a canonical representative (the least member) and
/// all members in canonical order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootClass {
    pub representative: Root,
    pub members: Vec<Root>,
}

/// The quotient of the root system by the connection relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassPartition {
    pub classes: Vec<RootClass>,
}

impl ClassPartition {
    pub fn class_of(&self, root: &Root) -> Option<usize> {
        self.classes
            .iter()
            .position(|c| c.members.contains(root))
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// Partitions the root system by repeated witness searches, taking the
/// first unassigned root in canonical order as each class representative.
pub fn equivalence_classes(rs: &RootSystem) -> ClassPartition {
    let roots: Vec<Root> = rs.roots().into_iter().cloned().collect();
    let mut assigned = vec![false; roots.len()];
    let mut classes = Vec::new();
    for i in 0..roots.len() {
        if assigned[i] {
            continue;
        }
        let mut members = Vec::new();
        for (j, other) in roots.iter().enumerate() {
            if assigned[j] {
                continue;
            }
            let connected = are_connected(rs, &roots[i], other)
                .expect("roots come from the system")
                .is_connected();
            if connected {
                assigned[j] = true;
                members.push(other.clone());
            }
        }
        classes.push(RootClass {
            representative: roots[i].clone(),
            members,
        });
    }
    ClassPartition { classes }
}
