use std::fs;
use std::path::Path;

use lattice_solids::counting::{oracle_count_with_caps, ORACLE_CAP_ENV};
use lattice_solids::orthogonal::tier_classes;
use lattice_solids::{
    complete_to_cube, cube_to_octahedron, enumerate_triples, fourth_vertices, is_irreducible, matrix_from_cube, omega,
    suitable_rs, tier_of, tier_representations, triangle, zeta_eta, Cube, Error, Int, IntVector3, OracleCaps,
    RSPair, RationalMatrix3, SolidKind, StrategyRegistry, TripleSolution,
};
use serde_json::{json, Value};
use thiserror::Error;

use crate::args::{BuildArgs, Cli, Command, CountArgs, Format, MatrixArgs, OmegaArgs, TriplesArgs};
use crate::output::{int, ints, parse_int, rational, vector, vectors, OutputRecord, Table};

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed invocation. Exit code 2.
    #[error("{0}")]
    Usage(String),
    /// Well-formed input that fails validation. Exit code 1.
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Input(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

/// Runs a parsed command and returns the text to print.
pub fn run(cli: &Cli) -> Result<String> {
    let (record, table, format) = match &cli.command {
        Command::Triples(a) => with_table(triples(a)?, a.format.format),
        Command::Omega(a) => with_table(omega_pairs(a)?, a.format.format),
        Command::Count(a) => with_table(count(a)?, a.format.format),
        Command::Build(a) => (build(a)?, None, Format::Json),
        Command::Matrix(a) => with_table(matrix(a)?, a.format.format),
        Command::Strategies(f) => with_table(strategies(), f.format),
    };
    match (format, table) {
        (Format::Json, _) => Ok(record.to_json()),
        (Format::Csv, Some(t)) => Ok(t.to_csv()),
        (Format::Csv, None) => Err(CliError::Usage(format!("--format csv is not available for `{}`", record.command))),
    }
}

fn with_table((record, table): (OutputRecord, Table), format: Format) -> (OutputRecord, Option<Table>, Format) {
    (record, Some(table), format)
}

fn triples(a: &TriplesArgs) -> Result<(OutputRecord, Table)> {
    let sols = enumerate_triples(a.dmax)?;
    let mut table = Table::new(vec!["d", "a", "b", "c"]);
    let list: Vec<Value> = sols
        .iter()
        .map(|t| {
            table.rows.push([t.d(), t.a(), t.b(), t.c()].map(Int::to_string).to_vec());
            json!({ "d": int(t.d()), "a": int(t.a()), "b": int(t.b()), "c": int(t.c()) })
        })
        .collect();
    let record = OutputRecord::new("triples", json!({ "dmax": a.dmax }), json!({ "triples": list }));
    Ok((record, table))
}

fn omega_pairs(a: &OmegaArgs) -> Result<(OutputRecord, Table)> {
    let pairs = omega(&Int::from(a.k))?;
    let mut table = Table::new(vec!["m", "n"]);
    let list: Vec<Value> = pairs
        .iter()
        .map(|p| {
            table.rows.push(vec![p.m().to_string(), p.n().to_string()]);
            json!([int(p.m()), int(p.n())])
        })
        .collect();
    let record = OutputRecord::new("omega", json!({ "k": a.k }), json!({ "pairs": list }));
    Ok((record, table))
}

struct OracleRow {
    count: Option<u64>,
    refused: Option<String>,
}

fn count(a: &CountArgs) -> Result<(OutputRecord, Table)> {
    let kind: SolidKind = a.kind.into();
    let caps = OracleCaps::from_env();
    let registry = StrategyRegistry::with_builtins(caps);
    let strategy = registry.get(&a.method)?;
    let work = || -> Result<(Vec<u64>, Option<Vec<OracleRow>>)> {
        let counts = strategy.count_series(kind, a.n)?;
        let oracle = if a.oracle {
            let rows = (1..=a.n)
                .map(|n| match oracle_count_with_caps(kind, n, caps) {
                    Ok(c) => Ok(OracleRow {
                        count: Some(c),
                        refused: None,
                    }),
                    Err(e @ Error::OracleCapExceeded { .. }) => Ok(OracleRow {
                        count: None,
                        refused: Some(e.to_string()),
                    }),
                    Err(e) => Err(e),
                })
                .collect::<lattice_solids::Result<Vec<_>>>()?;
            Some(rows)
        } else {
            None
        };
        Ok((counts, oracle))
    };
    let (counts, oracle) = match a.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build()
            .map_err(|e| CliError::Input(format!("cannot start {jobs} worker threads: {e}")))?
            .install(work)?,
        None => work()?,
    };

    let mut header = vec!["n", "count"];
    if oracle.is_some() {
        header.extend(["oracle", "match"]);
    }
    let mut table = Table::new(header);
    let mut rows = Vec::new();
    for (i, &c) in counts.iter().enumerate() {
        let n = i as u32 + 1;
        let mut line = vec![n.to_string(), c.to_string()];
        let row = match oracle.as_ref().map(|o| &o[i]) {
            None => json!({ "n": n, "count": c }),
            Some(o) => {
                let matched = o.count.map(|oc| oc == c);
                line.push(o.count.map_or_else(|| "refused".to_string(), |oc| oc.to_string()));
                line.push(matched.map_or_else(String::new, |m| m.to_string()));
                json!({ "n": n, "count": c, "oracle": o.count, "match": matched, "oracle_refused": o.refused })
            }
        };
        table.rows.push(line);
        rows.push(row);
    }
    let params = json!({
        "kind": kind.short_name(),
        "n": a.n,
        "method": a.method,
        "oracle": a.oracle,
        "oracle_caps": { "tetra": caps.tetrahedron, "cube": caps.cube, "octa": caps.octahedron },
    });
    Ok((OutputRecord::new("count", params, json!({ "rows": rows })), table))
}

fn sign_labels(plus: bool, minus: bool) -> Vec<&'static str> {
    let mut out = Vec::new();
    if plus {
        out.push("+");
    }
    if minus {
        out.push("-");
    }
    out
}

fn build(a: &BuildArgs) -> Result<OutputRecord> {
    let [ta, tb, tc, td] = a.triple.clone();
    let t = TripleSolution::new(ta, tb, tc, td)?;
    let rs = match &a.rs {
        Some([r, s]) => RSPair::new(r.clone(), s.clone(), t.q())?,
        None => suitable_rs(&t)?,
    };
    let ze = zeta_eta(&t, &rs)?;
    let [m, n] = &a.mn;
    let k = &a.k[0];
    let fv = fourth_vertices(&ze, m, n, k)?;
    let tri = triangle(&ze, m, n)?;
    let labels = sign_labels(fv.signs.plus_valid, fv.signs.minus_valid);
    let tetrahedra = fv.tetrahedra()?;

    let mut payload = json!({
        "plane": { "a": int(t.a()), "b": int(t.b()), "c": int(t.c()), "d": int(t.d()) },
        "rs": { "r": int(&rs.r), "s": int(&rs.s), "q": int(&rs.q) },
        "zeta": vector(&ze.zeta),
        "eta": vector(&ze.eta),
        "triangle": { "vertices": vectors(&tri.vertices()), "side_sq": int(&tri.side_sq) },
        "tetrahedra": tetrahedra
            .iter()
            .zip(&labels)
            .map(|(tet, sign)| json!({ "sign": sign, "vertices": vectors(tet.vertices()), "side_sq": int(tet.side_sq()) }))
            .collect::<Vec<_>>(),
    });
    if a.cube || a.octa {
        let cubes: Vec<Cube> = tetrahedra.iter().map(complete_to_cube).collect::<lattice_solids::Result<_>>()?;
        if a.cube {
            payload["cubes"] = cubes
                .iter()
                .zip(&labels)
                .map(|(c, sign)| {
                    json!({
                        "sign": sign,
                        "vertices": vectors(c.vertices()),
                        "side": int(c.side()),
                        "irreducible": is_irreducible(c),
                    })
                })
                .collect();
        }
        if a.octa {
            payload["octahedra"] = cubes
                .iter()
                .zip(&labels)
                .map(|(c, sign)| {
                    let o = cube_to_octahedron(c);
                    json!({
                        "sign": sign,
                        "vertices": vectors(o.vertices()),
                        "center": vector(o.center()),
                        "edge_sq": int(&o.edge_sq()),
                    })
                })
                .collect();
        }
    }
    let params = json!({
        "triple": ints(&a.triple),
        "mn": ints(&a.mn),
        "k": int(k),
        "rs": a.rs.as_ref().map(|rs| ints(rs)),
        "cube": a.cube,
        "octa": a.octa,
    });
    Ok(OutputRecord::new("build", params, payload))
}

/// Parses a JSON array of eight `[x, y, z]` integer triples.
pub fn read_cube_points(text: &str) -> Result<[IntVector3; 8]> {
    let value: Value = serde_json::from_str(text).map_err(|e| CliError::Input(format!("cube file is not JSON: {e}")))?;
    let items = value
        .as_array()
        .ok_or_else(|| CliError::Input("cube file must hold a JSON array of 8 [x, y, z] points".into()))?;
    if items.len() != 8 {
        return Err(CliError::Input(format!("cube file holds {} points, expected 8", items.len())));
    }
    let mut points = Vec::with_capacity(8);
    for (i, item) in items.iter().enumerate() {
        let coords: Option<Vec<Int>> = item.as_array().and_then(|c| c.iter().map(parse_int).collect());
        match coords.as_deref() {
            Some([x, y, z]) => points.push(IntVector3::new(x.clone(), y.clone(), z.clone())),
            _ => return Err(CliError::Input(format!("point {i} is not an [x, y, z] integer triple: {item}"))),
        }
    }
    Ok(points.try_into().expect("eight points"))
}

fn matrix_rows(m: &RationalMatrix3) -> Value {
    Value::Array(
        m.entries()
            .iter()
            .map(|row| Value::Array(row.iter().map(|e| Value::String(rational(e))).collect()))
            .collect(),
    )
}

fn matrix(a: &MatrixArgs) -> Result<(OutputRecord, Table)> {
    if let Some(path) = &a.from_cube {
        return matrix_from_file(path, a.rotation);
    }
    if let Some(n) = a.tier_reps {
        let reps = tier_representations(n)?;
        let mut table = Table::new(vec!["a", "b", "c"]);
        for r in &reps {
            table.rows.push(r.iter().map(Int::to_string).collect());
        }
        let payload = json!({ "tier": n, "representations": reps.iter().map(|r| ints(r)).collect::<Vec<_>>() });
        return Ok((OutputRecord::new("matrix", json!({ "tier_reps": n }), payload), table));
    }
    let n = a.tier_classes.expect("clap enforces one source");
    let (classes, total) = tier_classes(n)?;
    let mut table = Table::new(vec!["class", "row", "c1", "c2", "c3"]);
    for (i, m) in classes.iter().enumerate() {
        for (r, row) in m.iter().enumerate() {
            table.rows.push(vec![i.to_string(), r.to_string(), row[0].to_string(), row[1].to_string(), row[2].to_string()]);
        }
    }
    let payload = json!({ "tier": n, "matrices": total, "classes": classes });
    Ok((OutputRecord::new("matrix", json!({ "tier_classes": n }), payload), table))
}

fn matrix_from_file(path: &Path, rotation: bool) -> Result<(OutputRecord, Table)> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let cube = Cube::new(read_cube_points(&text)?)?;
    let mut m = matrix_from_cube(&cube)?;
    if rotation {
        m = m.to_rotation();
    }
    let mut table = Table::new(vec!["c1", "c2", "c3"]);
    for row in m.entries() {
        table.rows.push(row.iter().map(rational).collect());
    }
    let tier = tier_of(&m).0;
    let payload = json!({
        "matrix": matrix_rows(&m),
        "tier": int(&tier),
        "scaled": Value::Array(m.scaled_integers().iter().map(|row| ints(row)).collect()),
        "determinant": rational(&m.determinant()),
        "orthogonal": m.is_orthogonal(),
        "cube": { "base": vector(cube.base()), "edges": vectors(&cube.edges()), "side": int(cube.side()) },
    });
    let params = json!({ "from_cube": path.display().to_string(), "rotation": rotation });
    Ok((OutputRecord::new("matrix", params, payload), table))
}

fn strategies() -> (OutputRecord, Table) {
    let registry = StrategyRegistry::with_builtins(OracleCaps::from_env());
    let mut table = Table::new(vec!["name", "description"]);
    let list: Vec<Value> = registry
        .iter()
        .map(|s| {
            table.rows.push(vec![s.name().to_string(), s.description().to_string()]);
            json!({ "name": s.name(), "description": s.description() })
        })
        .collect();
    let payload = json!({ "strategies": list, "oracle_cap_env": ORACLE_CAP_ENV });
    (OutputRecord::new("strategies", json!({}), payload), table)
}
