//! The result document printed by every command, as JSON or as a plain
//! listing.

use std::fmt::Write as _;

use gcover::arith::{parse_poly_list, ArithError, Poly, Ring};
use serde::{Deserialize, Serialize};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ResultDocument {
    pub engine: String,
    pub command: String,
    pub input: InputEcho,
    pub profile: ProfileBlock,
    pub result: ResultBlock,
    /// Only filled in on request, so that output is reproducible by default.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct InputEcho {
    pub vars: Vec<String>,
    pub ideal: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dualpoly: Option<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ProfileBlock {
    pub length: usize,
    pub hilbert: Vec<usize>,
    pub socle_degree: usize,
    pub cm_type: usize,
    pub emb_dim: usize,
}

/// A rational matrix with entries printed as strings.
pub type MatrixBlock = Vec<Vec<String>>;

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    /// `V₊(keep) ∖ V₊(remove)` in `P^ambient_dim`.
    pub ambient_dim: usize,
    pub coordinates: Vec<String>,
    pub keep: Vec<String>,
    pub remove: Vec<String>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct SampledPoint {
    pub point: Vec<String>,
    pub polynomial: String,
    pub removed: bool,
    pub cover: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub colength: Option<usize>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct Certification {
    pub seed: u64,
    pub trials: usize,
    pub certified_covers: usize,
    pub certified_failures: usize,
    pub all_agree: bool,
    pub exhausted: bool,
    pub points: Vec<SampledPoint>,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ResultBlock {
    Profile,
    Dual {
        basis: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        matrices: Option<Vec<MatrixBlock>>,
    },
    Integrate {
        power: usize,
        base: Vec<String>,
        layers: Vec<Vec<String>>,
        h: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        matrices: Option<Vec<MatrixBlock>>,
    },
    Teter {
        cover: String,
        teter: bool,
        a: Vec<String>,
        presentation: Presentation,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        certification: Option<Certification>,
    },
    Mgc2 {
        cover: String,
        b: Vec<String>,
        d_hat: Vec<String>,
        nonempty: bool,
        presentation: Presentation,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        certification: Option<Certification>,
    },
    CheckCover {
        dualpoly: String,
        cover: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        colength: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        length_cover: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        k_f: Option<Vec<String>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<String>,
    },
}

/// Generators in canonical order, printed.
pub fn canonical(gens: &[Poly]) -> Vec<String> {
    let mut v: Vec<Poly> = gens.iter().map(Poly::normalized).collect();
    v.sort();
    v.dedup();
    v.iter().map(Poly::to_string).collect()
}

/// Parses printed generators back in the ring with the given coordinates.
pub fn reparse(coordinates: &[String], gens: &[String]) -> Result<Vec<Poly>, ArithError> {
    let ring = Ring::new(coordinates.iter().cloned());
    gens.iter()
        .map(|g| parse_poly_list(&ring, g).map(|mut v| v.remove(0)))
        .collect()
}

fn listing(out: &mut String, name: &str, gens: &[String]) {
    let _ = writeln!(out, "{name};");
    if gens.is_empty() {
        let _ = writeln!(out, "_[1]=0");
    }
    for (i, g) in gens.iter().enumerate() {
        let _ = writeln!(out, "_[{}]={g}", i + 1);
    }
}

fn matrices(out: &mut String, ms: &[MatrixBlock]) {
    for (k, m) in ms.iter().enumerate() {
        let _ = writeln!(out, "U{};", k + 1);
        for row in m {
            let _ = writeln!(out, "  {}", row.join(" "));
        }
    }
}

fn presentation(out: &mut String, p: &Presentation) {
    let keep = if p.keep.is_empty() { format!("P^{}", p.ambient_dim) } else { "V+(keep)".to_string() };
    let _ = writeln!(out, "coordinates = {}", p.coordinates.join(","));
    let _ = writeln!(out, "MGC = {keep} \\ V+(remove) in P^{}", p.ambient_dim);
    listing(out, "keep", &p.keep);
    listing(out, "remove", &p.remove);
}

fn certification(out: &mut String, c: &Certification) {
    let _ = writeln!(
        out,
        "certified: {} covers off the removed locus, {} failures on it (seed {}, {} trials{}{})",
        c.certified_covers,
        c.certified_failures,
        c.seed,
        c.trials,
        if c.all_agree { "" } else { ", DISAGREEMENT" },
        if c.exhausted { ", sampling exhausted" } else { "" },
    );
    for p in &c.points {
        let status = match (p.cover, p.colength) {
            (true, Some(l)) => format!("cover of colength {l}"),
            _ => "not a cover".to_string(),
        };
        let side = if p.removed { "on" } else { "off" };
        let _ = writeln!(out, "  ({}) {side}: {} -> {status}", p.point.join(":"), p.polynomial);
    }
}

impl ResultDocument {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<ResultDocument, serde_json::Error> {
        serde_json::from_str(s)
    }

    /// Plain listing with `name;` headers followed by `_[i]=…` generators.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "// {} {}", self.engine, self.command);
        let _ = writeln!(out, "vars {};", self.input.vars.join(", "));
        let _ = writeln!(out, "ideal {};", self.input.ideal.join(", "));
        if let Some(f) = &self.input.dualpoly {
            let _ = writeln!(out, "dualpoly {f};");
        }
        let p = &self.profile;
        let hf: Vec<String> = p.hilbert.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "length = {}", p.length);
        let _ = writeln!(out, "hilbert = {}", hf.join(","));
        let _ = writeln!(out, "socle_degree = {}", p.socle_degree);
        let _ = writeln!(out, "type = {}", p.cm_type);
        let _ = writeln!(out, "emb_dim = {}", p.emb_dim);
        match &self.result {
            ResultBlock::Profile => {}
            ResultBlock::Dual { basis, matrices: ms } => {
                listing(&mut out, "dual", basis);
                if let Some(ms) = ms {
                    matrices(&mut out, ms);
                }
            }
            ResultBlock::Integrate { power, base, layers, h, matrices: ms } => {
                let hs: Vec<String> = h.iter().map(usize::to_string).collect();
                let _ = writeln!(out, "power = {power}");
                let _ = writeln!(out, "h = {}", hs.join(","));
                listing(&mut out, "dual", base);
                for (i, l) in layers.iter().enumerate() {
                    listing(&mut out, &format!("layer({})", i + 1), l);
                }
                if let Some(ms) = ms {
                    matrices(&mut out, ms);
                }
            }
            ResultBlock::Teter { cover, teter, a, presentation: p, certification: c } => {
                let _ = writeln!(out, "F;\n{cover}");
                listing(&mut out, "a", a);
                let _ = writeln!(out, "gcl = {}", if *teter { "1" } else { "> 1" });
                presentation(&mut out, p);
                if let Some(c) = c {
                    certification(&mut out, c);
                }
            }
            ResultBlock::Mgc2 { cover, b, d_hat, nonempty, presentation: p, certification: c } => {
                let _ = writeln!(out, "H;\n{cover}");
                listing(&mut out, "b", b);
                listing(&mut out, "d", d_hat);
                let _ = writeln!(out, "gcl = {}", if *nonempty { "2" } else { "> 2" });
                presentation(&mut out, p);
                if let Some(c) = c {
                    certification(&mut out, c);
                }
            }
            ResultBlock::CheckCover { dualpoly, cover, colength, length_cover, k_f, witness } => {
                let _ = writeln!(out, "F;\n{dualpoly}");
                if *cover {
                    let _ = writeln!(out, "cover = yes");
                    if let (Some(c), Some(l)) = (colength, length_cover) {
                        let _ = writeln!(out, "colength = {c}\nlength = {l}");
                    }
                    if let Some(k) = k_f {
                        listing(&mut out, "K_F", k);
                    }
                } else {
                    let _ = writeln!(out, "cover = no");
                    if let Some(w) = witness {
                        let _ = writeln!(out, "witness = {w}");
                    }
                }
            }
        }
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "// {ms} ms");
        }
        out
    }
}

/// Reads back the generators listed under `name;` in a text document.
pub fn text_listing(text: &str, name: &str) -> Option<Vec<String>> {
    let header = format!("{name};");
    let mut lines = text.lines().skip_while(|l| *l != header);
    lines.next()?;
    let gens: Vec<String> = lines
        .map_while(|l| l.strip_prefix("_[").and_then(|r| r.split_once("]=")).map(|(_, g)| g.to_string()))
        .filter(|g| g != "0")
        .collect();
    Some(gens)
}
