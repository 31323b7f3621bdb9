//! Machine-readable catalog export.

use crate::catalog::{
    biexception_records, cycle_exceptions, exception_tournament, finite_path_exceptions,
    tournament_names, BiexceptionBase,
};
use crate::catalog::{biexception_rows, BiexCond, BiexNbrs, BiexS};
use serde::Serialize;

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
enum Record {
    Tournament {
        name: String,
        t: String,
    },
    PathException {
        id: usize,
        tournament: String,
        t: String,
        #[serde(rename = "type")]
        path_type: String,
        s: Vec<usize>,
        witnesses: Vec<String>,
    },
    Family {
        id: String,
        #[serde(rename = "type")]
        path_type: String,
        s: String,
        conditions: String,
    },
    Biexception {
        base: String,
        #[serde(rename = "type")]
        sign: String,
        neighborhood: String,
        s: String,
        condition: String,
    },
    CycleException {
        id: String,
        tournament: String,
        #[serde(rename = "type")]
        cycle_type: String,
        members: Vec<String>,
    },
}

/// Serializes every catalog record into one JSON array. The output is
/// deterministic and committed to the repository next to the sources.
pub fn catalog_json() -> String {
    let mut records: Vec<Record> = Vec::new();
    for name in tournament_names() {
        records.push(Record::Tournament {
            name: name.to_string(),
            t: exception_tournament(name).expect("named").to_line(),
        });
    }
    for rec in finite_path_exceptions() {
        records.push(Record::PathException {
            id: rec.id,
            tournament: rec.tournament_name.to_string(),
            t: rec.tournament.to_line(),
            path_type: rec.path.to_string(),
            s: rec.non_origins.clone(),
            witnesses: rec
                .witnesses
                .iter()
                .map(|w| w.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(""))
                .collect(),
        });
    }
    for (id, ty, s, conds) in FAMILY_SUMMARY {
        records.push(Record::Family {
            id: id.to_string(),
            path_type: ty.to_string(),
            s: s.to_string(),
            conditions: conds.to_string(),
        });
    }
    for (rec, row) in biexception_records().iter().zip(biexception_rows()) {
        let base = match &rec.base {
            BiexceptionBase::Finite(k) => format!("Exc {k}"),
            BiexceptionBase::Family(f, None) => format!("{}(n-1)", f.name()),
            BiexceptionBase::Family(f, Some(o)) => format!("{}({o})", f.name()),
        };
        records.push(Record::Biexception {
            base,
            sign: if rec.inpath { "-" } else { "+" }.to_string(),
            neighborhood: match row.nbrs {
                BiexNbrs::Exact(labels) => format!("{labels:?}"),
                BiexNbrs::WithinX => "subset of X".to_string(),
                BiexNbrs::AllOfX => "X".to_string(),
            },
            s: match row.s {
                BiexS::Labels(labels) => format!("{labels:?}"),
                BiexS::AllOfX => "X".to_string(),
                BiexS::ThreeAndYDominant => "{3, dominant of Y}".to_string(),
                BiexS::XMinimal => "{minimal of X}".to_string(),
            },
            condition: match row.cond {
                BiexCond::None => String::new(),
                BiexCond::YIsCyclicTriangle => "Y is the cyclic triangle".to_string(),
                BiexCond::YNotCyclicTriangleAndXSingleton => {
                    "Y is not the cyclic triangle and |X| = 1".to_string()
                }
                BiexCond::XIsTransitiveTriangle => "X is the transitive triangle".to_string(),
            },
        });
    }
    for rec in cycle_exceptions() {
        records.push(Record::CycleException {
            id: format!("A{}", rec.id),
            tournament: rec.tournament_name.to_string(),
            cycle_type: rec.cycle.to_string(),
            members: rec.members.iter().map(|m| m.to_line()).collect(),
        });
    }
    let mut s = serde_json::to_string_pretty(&records).expect("catalog serializes");
    s.push('\n');
    s
}

const FAMILY_SUMMARY: &[(&str, &str, &str, &str)] = &[
    ("E1", "+(1,n-2)", "{1,2,3}", "|X| >= 1"),
    ("E2", "+(2,n-3)", "{3,4}", "|X| >= 1"),
    (
        "E3",
        "+(1,n-2)",
        "{1,3}",
        "3 in X, an ingenerator of X with an outneighbor in X",
    ),
    (
        "E4",
        "+(2,n-3)",
        "{1,4}",
        "3 in X, an ingenerator of X with an outneighbor in X",
    ),
    (
        "E5",
        "+(1,n-2)",
        "{1,2}",
        "n >= 5, |Y| >= 2, 2 in X an ingenerator of X",
    ),
    (
        "E6",
        "+(2,n-3)",
        "{1,3}",
        "|Y| >= 2, 2 in X an ingenerator of X",
    ),
    (
        "E7",
        "+(1,1,n-3)",
        "{2,3}",
        "|Y| >= 3, Y not the cyclic triangle",
    ),
    ("E8", "+(n-4,1,1,1)", "X", "|X| >= 2"),
    ("E8'", "+(n-4,2,1)", "X", "|X| >= 2"),
    ("E9", "+(n-6,1,1,1,1,1)", "X", "|X| >= 2"),
    ("E9'", "+(n-6,2,1,1,1)", "X", "|X| >= 2"),
    ("E10", "+(n-8,1,1,1,1,1,1,1)", "X", "|X| >= 2"),
    ("E10'", "+(n-8,2,1,1,1,1,1)", "X", "|X| >= 2"),
    ("E11", "+(1,1,n-3)", "{1,2}", "|X| >= 2"),
    ("E12", "+(2,1,n-4)", "{1,4}", "|X| >= 2"),
    ("E13", "+(1,1,n-3)", "{1,2}", "|X| >= 2"),
    ("E14", "+(2,1,n-4)", "{1,6}", "|X| >= 2"),
];
