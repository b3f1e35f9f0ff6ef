//! Text format for fixed-point ledgers.
//!
//! A ledger file is line-oriented UTF-8; `#` starts a comment and blank
//! lines are ignored. Directives:
//!
//! ```text
//! group 3 3                      # cyclic moduli of the acting group
//! euler 108                      # ambient Euler characteristic (optional)
//! set 108                        # size of the model set (optional)
//! gen 0: 1 2 0 4 …               # image list of the generator of factor 0
//! gen 1: …                       # one line per cyclic factor
//! fix 1 0: explicit 0 1 5 …      # fixed points of element (1,0)
//! fix 0 1: declared count=27 euler=27
//! ```
//!
//! `set` plus one `gen` line per factor define the model action; they may
//! be omitted together, in which case every `fix` entry must be usable on
//! its own (`declared`, or `explicit` read just for its cardinality).
//! Every nontrivial group element needs a `fix` line, and inverse elements
//! must carry identical data.

use std::collections::BTreeMap;

use crate::orbits::{
    AbelianGroup, FixedPointLedger, FixedSetData, GroupAction, OrbitsError,
};

pub fn parse_ledger(input: &str) -> Result<FixedPointLedger, OrbitsError> {
    let mut moduli: Option<Vec<u64>> = None;
    let mut set_size: Option<usize> = None;
    let mut ambient_euler: Option<i64> = None;
    let mut gen_perms: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut fix_lines: Vec<(usize, Vec<u64>, FixedSetData)> = Vec::new();

    for (lineno, raw) in input.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: &str| OrbitsError::Parse(lineno, msg.to_string());
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "group" => {
                let m: Result<Vec<u64>, _> =
                    rest.split_whitespace().map(str::parse).collect();
                let m = m.map_err(|_| err("group moduli must be integers"))?;
                if m.is_empty() || m.iter().any(|&x| x == 0) {
                    return Err(err("group moduli must be positive"));
                }
                moduli = Some(m);
            }
            "set" => {
                set_size =
                    Some(rest.trim().parse().map_err(|_| err("set size must be an integer"))?);
            }
            "euler" => {
                ambient_euler = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| err("euler must be an integer"))?,
                );
            }
            "gen" => {
                let (idx, perm) = rest
                    .split_once(':')
                    .ok_or_else(|| err("gen line needs `gen <factor>: <images>`"))?;
                let idx: usize =
                    idx.trim().parse().map_err(|_| err("generator index must be an integer"))?;
                let perm: Result<Vec<usize>, _> =
                    perm.split_whitespace().map(str::parse).collect();
                gen_perms.insert(idx, perm.map_err(|_| err("images must be integers"))?);
            }
            "fix" => {
                let (el, data) = rest
                    .split_once(':')
                    .ok_or_else(|| err("fix line needs `fix <element>: <data>`"))?;
                let el: Result<Vec<u64>, _> =
                    el.split_whitespace().map(str::parse).collect();
                let el = el.map_err(|_| err("element coordinates must be integers"))?;
                let data = data.trim();
                let parsed = if let Some(points) = data.strip_prefix("explicit") {
                    let pts: Result<Vec<usize>, _> =
                        points.split_whitespace().map(str::parse).collect();
                    FixedSetData::Explicit(pts.map_err(|_| err("points must be integers"))?)
                } else if let Some(fields) = data.strip_prefix("declared") {
                    let mut count = None;
                    let mut euler = None;
                    for field in fields.split_whitespace() {
                        if let Some(v) = field.strip_prefix("count=") {
                            count =
                                Some(v.parse().map_err(|_| err("count must be an integer"))?);
                        } else if let Some(v) = field.strip_prefix("euler=") {
                            euler =
                                Some(v.parse().map_err(|_| err("euler must be an integer"))?);
                        } else {
                            return Err(err("declared fields are count= and euler="));
                        }
                    }
                    FixedSetData::Declared {
                        count: count.ok_or_else(|| err("declared needs count="))?,
                        euler: euler.ok_or_else(|| err("declared needs euler="))?,
                    }
                } else {
                    return Err(err("fix data must start with `explicit` or `declared`"));
                };
                fix_lines.push((lineno, el, parsed));
            }
            other => {
                return Err(OrbitsError::Parse(lineno, format!("unknown directive `{other}`")));
            }
        }
    }

    let moduli = moduli.ok_or(OrbitsError::Parse(0, "missing `group` directive".into()))?;
    let group = AbelianGroup::new(moduli);

    let model = match (set_size, gen_perms.is_empty()) {
        (Some(size), false) => {
            let k = group.moduli().len();
            let mut perms = Vec::with_capacity(k);
            for i in 0..k {
                perms.push(gen_perms.remove(&i).ok_or(OrbitsError::Parse(
                    0,
                    format!("missing `gen {i}` line for factor {i}"),
                ))?);
            }
            Some(GroupAction::from_generator_perms(group.clone(), size, &perms)?)
        }
        (None, true) => None,
        (Some(_), true) => {
            return Err(OrbitsError::Parse(0, "`set` given but no `gen` lines".into()))
        }
        (None, false) => {
            return Err(OrbitsError::Parse(0, "`gen` lines given but no `set` size".into()))
        }
    };

    let mut fixed = BTreeMap::new();
    for (lineno, el, data) in fix_lines {
        if !group.contains(&el) {
            return Err(OrbitsError::Parse(lineno, format!("element {el:?} out of range")));
        }
        if fixed.insert(el.clone(), data).is_some() {
            return Err(OrbitsError::Parse(lineno, format!("duplicate fix entry for {el:?}")));
        }
    }

    FixedPointLedger::new(group, model, fixed, ambient_euler)
}

pub fn format_ledger(ledger: &FixedPointLedger) -> String {
    let mut out = String::new();
    let moduli: Vec<String> = ledger.group().moduli().iter().map(u64::to_string).collect();
    out.push_str(&format!("group {}\n", moduli.join(" ")));
    if let Some(e) = ledger.ambient_euler() {
        out.push_str(&format!("euler {e}\n"));
    }
    if let Some(action) = ledger.model() {
        out.push_str(&format!("set {}\n", action.set_size()));
        for (i, _) in ledger.group().moduli().iter().enumerate() {
            let mut gen = ledger.group().identity();
            gen[i] = 1 % ledger.group().moduli()[i];
            let images: Vec<String> = (0..action.set_size())
                .map(|p| action.apply(&gen, p).to_string())
                .collect();
            out.push_str(&format!("gen {i}: {}\n", images.join(" ")));
        }
    }
    for (el, data) in ledger.fixed_data() {
        let coords: Vec<String> = el.iter().map(u64::to_string).collect();
        match data {
            FixedSetData::Explicit(points) => {
                let pts: Vec<String> = points.iter().map(usize::to_string).collect();
                out.push_str(&format!("fix {}: explicit {}\n", coords.join(" "), pts.join(" ")));
            }
            FixedSetData::Declared { count, euler } => {
                out.push_str(&format!(
                    "fix {}: declared count={count} euler={euler}\n",
                    coords.join(" ")
                ));
            }
        }
    }
    out
}
