//! Line-oriented job files: named sections defining groups, actions,
//! crossed-modules, equivariant structure and braidings, plus a [job]
//! section selecting the coefficients. Tables are explicit integer rows.
//!
//! ```text
//! budget 1000000
//!
//! [group Gamma]
//! cyclic 2
//!
//! [action a0]
//! actor G0
//! carrier G1
//! side right
//! trivial
//!
//! [xmod G]
//! g1 G1
//! g0 G0
//! boundary zero
//! action a0
//!
//! [gamma GG]
//! base G
//! group Gamma
//! act1 ga1
//! act0 ga0
//!
//! [job]
//! coefficients GG
//! ```

use std::collections::BTreeMap;
use std::fmt;
use xcoh_core::group::{make_semidirect, FiniteGroup, GroupAction, GroupHom, GroupRef, Side};
use xcoh_core::xmod::{Braiding, CrossedModule, GammaCrossedModule};

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        column,
        message: message.into(),
    })
}

/// A fully resolved job: the coefficient module, optional braiding, budget.
pub struct JobSpec {
    pub coefficients: GammaCrossedModule,
    pub coefficients_name: String,
    pub braiding: Option<Braiding>,
    pub braiding_name: Option<String>,
    pub budget: Option<u64>,
}

#[derive(Debug, Clone, PartialEq)]
enum SectionKind {
    Group,
    Action,
    Xmod,
    Gamma,
    Braiding,
    Job,
}

struct Section {
    kind: SectionKind,
    name: String,
    line: usize,
    entries: Vec<(usize, Vec<String>)>,
}

fn tokenize(text: &str) -> Vec<(usize, usize, Vec<String>)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let column = line.len() - line.trim_start().len() + 1;
        let tokens: Vec<String> = line.split_whitespace().map(|s| s.to_string()).collect();
        out.push((i + 1, column, tokens));
    }
    out
}

pub fn parse(text: &str) -> Result<JobSpec, ParseError> {
    let mut budget: Option<u64> = None;
    let mut sections: Vec<Section> = Vec::new();
    for (line, column, tokens) in tokenize(text) {
        let head = &tokens[0];
        if head.starts_with('[') {
            let joined = tokens.join(" ");
            let inner = joined
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or(ParseError {
                    line,
                    column,
                    message: "section header must look like [kind name]".into(),
                })?;
            let mut parts = inner.split_whitespace();
            let kind = match parts.next() {
                Some("group") => SectionKind::Group,
                Some("action") => SectionKind::Action,
                Some("xmod") => SectionKind::Xmod,
                Some("gamma") => SectionKind::Gamma,
                Some("braiding") => SectionKind::Braiding,
                Some("job") => SectionKind::Job,
                other => {
                    return err(line, column, format!("unknown section kind {other:?}"));
                }
            };
            let name = parts.next().unwrap_or("").to_string();
            if name.is_empty() && kind != SectionKind::Job {
                return err(line, column, "section needs a name");
            }
            sections.push(Section {
                kind,
                name,
                line,
                entries: Vec::new(),
            });
        } else if head == "budget" && sections.is_empty() {
            let v = tokens.get(1).ok_or(ParseError {
                line,
                column,
                message: "budget needs a value".into(),
            })?;
            budget = Some(v.parse().map_err(|_| ParseError {
                line,
                column,
                message: format!("bad budget value {v}"),
            })?);
        } else {
            match sections.last_mut() {
                None => return err(line, column, "content before the first section"),
                Some(s) => s.entries.push((line, tokens)),
            }
        }
    }

    let mut groups: BTreeMap<String, GroupRef> = BTreeMap::new();
    let mut actions: BTreeMap<String, GroupAction> = BTreeMap::new();
    let mut xmods: BTreeMap<String, CrossedModule> = BTreeMap::new();
    let mut gammas: BTreeMap<String, GammaCrossedModule> = BTreeMap::new();
    let mut braidings: BTreeMap<String, (String, Braiding)> = BTreeMap::new();
    type Entries = Vec<(usize, Vec<String>)>;
    let mut job: Option<(usize, Entries)> = None;

    let parse_usize = |line: usize, tok: &str| -> Result<usize, ParseError> {
        tok.parse().map_err(|_| ParseError {
            line,
            column: 1,
            message: format!("expected an integer, found {tok:?}"),
        })
    };

    for s in sections {
        match s.kind {
            SectionKind::Group => {
                let (line, first) = s.entries.first().ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "empty group section".into(),
                })?;
                let g = match first[0].as_str() {
                    "cyclic" => {
                        let n = parse_usize(*line, first.get(1).map(|x| x.as_str()).unwrap_or(""))?;
                        FiniteGroup::cyclic(n).map_err(|e| ParseError {
                            line: *line,
                            column: 1,
                            message: e.to_string(),
                        })?
                    }
                    "product" => {
                        let a = groups.get(&first[1]).ok_or(ParseError {
                            line: *line,
                            column: 1,
                            message: format!("unknown group {}", first[1]),
                        })?;
                        let b = groups.get(&first[2]).ok_or(ParseError {
                            line: *line,
                            column: 1,
                            message: format!("unknown group {}", first[2]),
                        })?;
                        FiniteGroup::direct_product(a, b)
                    }
                    "semidirect" => {
                        let n = groups.get(&first[1]).ok_or(ParseError {
                            line: *line,
                            column: 1,
                            message: format!("unknown group {}", first[1]),
                        })?;
                        let h = groups.get(&first[2]).ok_or(ParseError {
                            line: *line,
                            column: 1,
                            message: format!("unknown group {}", first[2]),
                        })?;
                        let act = actions.get(&first[3]).ok_or(ParseError {
                            line: *line,
                            column: 1,
                            message: format!("unknown action {}", first[3]),
                        })?;
                        make_semidirect(n, h, act)
                            .map(|(g, _, _)| g)
                            .map_err(|e| ParseError {
                                line: *line,
                                column: 1,
                                message: e.to_string(),
                            })?
                    }
                    "table" => {
                        let n = parse_usize(*line, first.get(1).map(|x| x.as_str()).unwrap_or(""))?;
                        let mut mul = Vec::with_capacity(n * n);
                        for (l, row) in &s.entries[1..] {
                            if row[0] != "row" {
                                return err(*l, 1, "expected a table row");
                            }
                            for tok in &row[1..] {
                                mul.push(parse_usize(*l, tok)?);
                            }
                        }
                        FiniteGroup::from_mul_table(s.name.clone(), n, mul).map_err(|e| {
                            ParseError {
                                line: *line,
                                column: 1,
                                message: e.to_string(),
                            }
                        })?
                    }
                    other => {
                        return err(*line, 1, format!("unknown group constructor {other:?}"));
                    }
                };
                groups.insert(s.name, g);
            }
            SectionKind::Action => {
                let mut actor = None;
                let mut carrier = None;
                let mut side = None;
                let mut kind: Option<&str> = None;
                let mut rows: Vec<usize> = Vec::new();
                for (line, toks) in &s.entries {
                    match toks[0].as_str() {
                        "actor" => actor = Some((*line, toks[1].clone())),
                        "carrier" => carrier = Some((*line, toks[1].clone())),
                        "side" => {
                            side = Some(match toks[1].as_str() {
                                "left" => Side::Left,
                                "right" => Side::Right,
                                other => {
                                    return err(*line, 1, format!("bad side {other:?}"));
                                }
                            })
                        }
                        "trivial" => kind = Some("trivial"),
                        "inversion" => kind = Some("inversion"),
                        "row" => {
                            kind = Some("table");
                            for tok in &toks[1..] {
                                rows.push(parse_usize(*line, tok)?);
                            }
                        }
                        other => return err(*line, 1, format!("unknown action key {other:?}")),
                    }
                }
                let (aline, aname) = actor.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "action needs an actor".into(),
                })?;
                let (cline, cname) = carrier.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "action needs a carrier".into(),
                })?;
                let actor = groups.get(&aname).ok_or(ParseError {
                    line: aline,
                    column: 1,
                    message: format!("unknown group {aname}"),
                })?;
                let carrier = groups.get(&cname).ok_or(ParseError {
                    line: cline,
                    column: 1,
                    message: format!("unknown group {cname}"),
                })?;
                let side = side.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "action needs a side".into(),
                })?;
                let act = match kind {
                    Some("trivial") => GroupAction::trivial(actor, carrier, side),
                    Some("inversion") => {
                        GroupAction::inversion(actor, carrier, side).map_err(|e| ParseError {
                            line: s.line,
                            column: 1,
                            message: e.to_string(),
                        })?
                    }
                    Some("table") => GroupAction::new(actor.clone(), carrier.clone(), side, rows)
                        .map_err(|e| ParseError {
                        line: s.line,
                        column: 1,
                        message: e.to_string(),
                    })?,
                    _ => {
                        return err(s.line, 1, "action needs trivial, inversion or rows");
                    }
                };
                actions.insert(s.name, act);
            }
            SectionKind::Xmod => {
                let mut g1 = None;
                let mut g0 = None;
                let mut boundary: Option<(usize, Vec<String>)> = None;
                let mut action = None;
                for (line, toks) in &s.entries {
                    match toks[0].as_str() {
                        "g1" => g1 = Some((*line, toks[1].clone())),
                        "g0" => g0 = Some((*line, toks[1].clone())),
                        "boundary" => boundary = Some((*line, toks[1..].to_vec())),
                        "action" => action = Some((*line, toks[1].clone())),
                        other => return err(*line, 1, format!("unknown xmod key {other:?}")),
                    }
                }
                let (l1, n1) = g1.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "xmod needs g1".into(),
                })?;
                let (l0, n0) = g0.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "xmod needs g0".into(),
                })?;
                let g1 = groups
                    .get(&n1)
                    .ok_or(ParseError {
                        line: l1,
                        column: 1,
                        message: format!("unknown group {n1}"),
                    })?
                    .clone();
                let g0 = groups
                    .get(&n0)
                    .ok_or(ParseError {
                        line: l0,
                        column: 1,
                        message: format!("unknown group {n0}"),
                    })?
                    .clone();
                let (bline, btoks) = boundary.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "xmod needs a boundary".into(),
                })?;
                let bmap = match btoks.first().map(|x| x.as_str()) {
                    Some("zero") => GroupHom::trivial(&g1, &g0),
                    Some("identity") => {
                        GroupHom::new(g1.clone(), g0.clone(), (0..g1.order()).collect()).map_err(
                            |e| ParseError {
                                line: bline,
                                column: 1,
                                message: e.to_string(),
                            },
                        )?
                    }
                    _ => {
                        let vals: Vec<usize> = btoks
                            .iter()
                            .map(|t| parse_usize(bline, t))
                            .collect::<Result<_, _>>()?;
                        GroupHom::new(g1.clone(), g0.clone(), vals).map_err(|e| ParseError {
                            line: bline,
                            column: 1,
                            message: e.to_string(),
                        })?
                    }
                };
                let (aline, aname) = action.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "xmod needs an action".into(),
                })?;
                let act = actions
                    .get(&aname)
                    .ok_or(ParseError {
                        line: aline,
                        column: 1,
                        message: format!("unknown action {aname}"),
                    })?
                    .clone();
                let xm = CrossedModule::new(s.name.clone(), g1, g0, bmap, act).map_err(|e| {
                    ParseError {
                        line: s.line,
                        column: 1,
                        message: e.to_string(),
                    }
                })?;
                xmods.insert(s.name, xm);
            }
            SectionKind::Gamma => {
                let mut base = None;
                let mut group = None;
                let mut act1 = None;
                let mut act0 = None;
                for (line, toks) in &s.entries {
                    match toks[0].as_str() {
                        "base" => base = Some((*line, toks[1].clone())),
                        "group" => group = Some((*line, toks[1].clone())),
                        "act1" => act1 = Some((*line, toks[1].clone())),
                        "act0" => act0 = Some((*line, toks[1].clone())),
                        other => return err(*line, 1, format!("unknown gamma key {other:?}")),
                    }
                }
                let fetch_action = |slot: Option<(usize, String)>,
                                    what: &str|
                 -> Result<GroupAction, ParseError> {
                    let (line, name) = slot.ok_or(ParseError {
                        line: s.line,
                        column: 1,
                        message: format!("gamma needs {what}"),
                    })?;
                    actions.get(&name).cloned().ok_or(ParseError {
                        line,
                        column: 1,
                        message: format!("unknown action {name}"),
                    })
                };
                let (bline, bname) = base.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "gamma needs a base".into(),
                })?;
                let base = xmods
                    .get(&bname)
                    .ok_or(ParseError {
                        line: bline,
                        column: 1,
                        message: format!("unknown xmod {bname}"),
                    })?
                    .clone();
                let (gline, gname) = group.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "gamma needs a group".into(),
                })?;
                let gamma = groups
                    .get(&gname)
                    .ok_or(ParseError {
                        line: gline,
                        column: 1,
                        message: format!("unknown group {gname}"),
                    })?
                    .clone();
                let act1 = fetch_action(act1, "act1")?;
                let act0 = fetch_action(act0, "act0")?;
                let gx =
                    GammaCrossedModule::new(base, gamma, act1, act0).map_err(|e| ParseError {
                        line: s.line,
                        column: 1,
                        message: e.to_string(),
                    })?;
                gammas.insert(s.name, gx);
            }
            SectionKind::Braiding => {
                let mut owner = None;
                let mut trivial = false;
                let mut rows: Vec<usize> = Vec::new();
                for (line, toks) in &s.entries {
                    match toks[0].as_str() {
                        "owner" => owner = Some((*line, toks[1].clone())),
                        "trivial" => trivial = true,
                        "row" => {
                            for tok in &toks[1..] {
                                rows.push(parse_usize(*line, tok)?);
                            }
                        }
                        other => return err(*line, 1, format!("unknown braiding key {other:?}")),
                    }
                }
                let (oline, oname) = owner.ok_or(ParseError {
                    line: s.line,
                    column: 1,
                    message: "braiding needs an owner".into(),
                })?;
                let base = gammas
                    .get(&oname)
                    .map(|gx| gx.base.clone())
                    .or_else(|| xmods.get(&oname).cloned())
                    .ok_or(ParseError {
                        line: oline,
                        column: 1,
                        message: format!("unknown coefficients {oname}"),
                    })?;
                let br = if trivial {
                    Braiding::trivial(&base)
                } else {
                    let n0 = base.g0.order();
                    if rows.len() != n0 * n0 {
                        return err(
                            s.line,
                            1,
                            format!(
                                "braiding table has {} entries, expected {}",
                                rows.len(),
                                n0 * n0
                            ),
                        );
                    }
                    Braiding {
                        bracket: rows,
                        gamma_equivariant: true,
                    }
                };
                braidings.insert(s.name, (oname, br));
            }
            SectionKind::Job => job = Some((s.line, s.entries)),
        }
    }

    let (job_line, entries) = job.ok_or(ParseError {
        line: 1,
        column: 1,
        message: "missing [job] section".into(),
    })?;
    let mut coefficients = None;
    let mut braiding_name = None;
    for (line, toks) in &entries {
        match toks[0].as_str() {
            "coefficients" => coefficients = Some((*line, toks[1].clone())),
            "braiding" => braiding_name = Some((*line, toks[1].clone())),
            "budget" => {
                budget = Some(toks[1].parse().map_err(|_| ParseError {
                    line: *line,
                    column: 1,
                    message: format!("bad budget value {}", toks[1]),
                })?)
            }
            other => return err(*line, 1, format!("unknown job key {other:?}")),
        }
    }
    let (cline, cname) = coefficients.ok_or(ParseError {
        line: job_line,
        column: 1,
        message: "job needs coefficients".into(),
    })?;
    let gx = gammas
        .get(&cname)
        .ok_or(ParseError {
            line: cline,
            column: 1,
            message: format!("unknown gamma section {cname}"),
        })?
        .clone();
    let braiding = match &braiding_name {
        None => None,
        Some((line, name)) => {
            let (owner, br) = braidings.get(name).ok_or(ParseError {
                line: *line,
                column: 1,
                message: format!("unknown braiding {name}"),
            })?;
            let owner_matches = gammas
                .get(owner)
                .map(|g| g.base == gx.base)
                .or_else(|| xmods.get(owner).map(|x| *x == gx.base))
                .unwrap_or(false);
            if !owner_matches {
                return err(
                    *line,
                    1,
                    "braiding owner does not match the job coefficients",
                );
            }
            Some(br.clone())
        }
    };
    Ok(JobSpec {
        coefficients: gx,
        coefficients_name: cname,
        braiding,
        braiding_name: braiding_name.map(|(_, n)| n),
        budget,
    })
}
