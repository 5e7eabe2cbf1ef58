use std::io::Write;
use std::process::{Command, Output, Stdio};

use gcover::arith::Poly;
use gcover::groebner::{equal_up_to_radical, Ideal};
use gcover_cli::document::{reparse, text_listing, ResultBlock, ResultDocument};
use gcover_cli::problem::parse_problem;
use gcover_cli::{run, Command as Cmd, Options};
use proptest::prelude::*;

const PROBLEMS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/problems");

fn gcover(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_gcover"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn problem(name: &str) -> String {
    format!("{PROBLEMS}/{name}.gc")
}

fn json(args: &[&str]) -> ResultDocument {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let out = gcover(&all, None);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    ResultDocument::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap()
}

fn code(args: &[&str], stdin: Option<&str>) -> i32 {
    gcover(args, stdin).status.code().unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["profile", &problem("square")], None), 0);
    assert_eq!(code(&["profile"], Some("vars x; ideal x^;")), 2);
    assert_eq!(code(&["profile"], Some("vars x; ideal ;")), 2);
    assert_eq!(code(&["profile"], Some("vars x, y; ideal x^2;")), 3);
    assert_eq!(code(&["profile"], Some("vars x, y; ideal x - 1, y;")), 3);
    assert_eq!(code(&["check-cover"], Some("vars x; ideal x^2; dualpoly 0;")), 2);
    assert_eq!(code(&["check-cover", &problem("square")], None), 2);
    assert_eq!(code(&["teter", &problem("gorenstein")], None), 4);
    assert_eq!(code(&["mgc2", &problem("gorenstein")], None), 4);
    assert_eq!(code(&["mgc2", &problem("square")], None), 5);
    assert_eq!(code(&["profile", "/nonexistent/problem.gc"], None), 1);
}

#[test]
fn profile_from_stdin_with_own_variable_names() {
    let out = gcover(&["profile", "--format", "json"], Some("vars s, t; ideal s^2, s*t^2, t^4;"));
    assert!(out.status.success());
    let d = ResultDocument::from_json(&String::from_utf8(out.stdout).unwrap()).unwrap();
    assert_eq!(d.profile.hilbert, [1, 2, 2, 1]);
    assert_eq!(d.profile.cm_type, 2);
    assert_eq!(d.input.vars, ["s", "t"]);
}

#[test]
fn teter_on_the_square_of_the_maximal_ideal() {
    let d = json(&["teter", &problem("square"), "--certify", "3", "--seed", "5"]);
    let ResultBlock::Teter { teter, presentation, certification, .. } = d.result else { panic!() };
    assert!(teter);
    let coords = &presentation.coordinates;
    let ring = gcover::arith::Ring::new(coords.iter().cloned());
    let a = Ideal::new(&ring, reparse(coords, &presentation.remove).unwrap());
    let quadric = Ideal::new(&ring, reparse(coords, &["a1*a3 - a2^2".to_string()]).unwrap());
    assert!(equal_up_to_radical(&a, &quadric));
    let c = certification.unwrap();
    assert!(c.all_agree);
    assert_eq!(c.certified_covers, 3);
    assert_eq!(c.certified_failures, 3);
}

#[test]
fn mgc2_on_hf_1221() {
    let d = json(&["mgc2", &problem("hf1221")]);
    let ResultBlock::Mgc2 { nonempty, presentation, .. } = d.result else { panic!() };
    assert!(nonempty);
    assert_eq!(presentation.ambient_dim + 1, presentation.coordinates.len());
}

#[test]
fn check_cover_reports_colength_and_k_f() {
    let d = json(&["check-cover", &problem("check_cover")]);
    let ResultBlock::CheckCover { cover, colength, k_f, .. } = d.result else { panic!() };
    assert!(cover);
    assert_eq!(colength, Some(2));
    let ring = gcover::apolarity::series_ring(3);
    let k = Ideal::new(&ring, reparse(&["x1".into(), "x2".into(), "x3".into()], &k_f.unwrap()).unwrap());
    let expected = Ideal::new(&ring, gcover::arith::parse_poly_list(&ring, "x1, x2^2, x3").unwrap());
    assert!(k.same_ideal(&expected));

    let d = json(&["check-cover", &problem("cube")]);
    let ResultBlock::CheckCover { cover, colength, .. } = d.result else { panic!() };
    assert!(cover);
    assert_eq!(colength, Some(3));

    let out = gcover(&["check-cover"], Some("vars x1, x2; ideal x1^2, x1*x2, x2^2; dualpoly y1^2;"));
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("cover = no"));
}

#[test]
fn integrate_twice_with_matrices() {
    let d = json(&["integrate", &problem("square"), "--power", "2", "--matrices"]);
    let ResultBlock::Integrate { h, layers, matrices, .. } = d.result else { panic!() };
    assert_eq!(h, [3, 4]);
    assert_eq!(layers.iter().map(Vec::len).collect::<Vec<_>>(), h);
    let ms = matrices.unwrap();
    assert_eq!(ms.len(), 2);
    assert!(ms.iter().all(|m| m.len() == 10 && m.iter().all(|r| r.len() == 10)));
}

#[test]
fn output_is_deterministic_without_timing() {
    let args = ["teter", &problem("hf131"), "--certify", "2", "--seed", "11"];
    let a = gcover(&args, None);
    let b = gcover(&args, None);
    assert_eq!(a.stdout, b.stdout);
    let t = gcover(&[&args[..], &["--timing", "--format", "json"]].concat(), None);
    let d = ResultDocument::from_json(&String::from_utf8(t.stdout).unwrap()).unwrap();
    assert!(d.elapsed_ms.is_some());
}

/// Every printed ideal parses back to the same generators, from both
/// output formats.
#[test]
fn printed_ideals_reparse() {
    for (cmd, name) in [(Cmd::Teter, "hf131"), (Cmd::Mgc2, "hf1221"), (Cmd::Teter, "square")] {
        let p = parse_problem(&std::fs::read_to_string(problem(name)).unwrap()).unwrap();
        let doc = run(cmd, &p, &Options::default()).unwrap();
        assert_eq!(ResultDocument::from_json(&doc.to_json()).unwrap(), doc);
        let text = doc.to_text();
        let (coords, lists) = match &doc.result {
            ResultBlock::Teter { presentation, a, .. } => {
                (presentation.coordinates.clone(), vec![("a", a.clone()), ("remove", presentation.remove.clone())])
            }
            ResultBlock::Mgc2 { presentation, b, d_hat, .. } => (
                presentation.coordinates.clone(),
                vec![("b", b.clone()), ("d", d_hat.clone()), ("keep", presentation.keep.clone())],
            ),
            _ => unreachable!(),
        };
        for (name, gens) in lists {
            let parsed: Vec<Poly> = reparse(&coords, &gens).unwrap();
            let printed: Vec<String> = parsed.iter().map(Poly::to_string).collect();
            assert_eq!(printed, gens);
            assert_eq!(text_listing(&text, name).unwrap(), gens);
        }
        let again = parse_problem(&p.to_source()).unwrap();
        assert_eq!(again.ideal, p.ideal);
    }
}

fn small_monomial_ideal() -> impl Strategy<Value = String> {
    // Staircases in two variables: x1^a, x2^b and a few mixed terms.
    (1u32..4, 1u32..4, proptest::collection::vec((1u32..3, 1u32..3), 0..3)).prop_map(|(a, b, mixed)| {
        let mut gens = vec![format!("x1^{a}"), format!("x2^{b}")];
        gens.extend(mixed.iter().map(|(i, j)| format!("x1^{i}*x2^{j}")));
        format!("vars x1, x2; ideal {};", gens.join(", "))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn json_documents_round_trip(src in small_monomial_ideal()) {
        let p = parse_problem(&src).unwrap();
        for cmd in [Cmd::Profile, Cmd::Dual, Cmd::Integrate] {
            let doc = run(cmd, &p, &Options { matrices: true, ..Options::default() }).unwrap();
            prop_assert_eq!(ResultDocument::from_json(&doc.to_json()).unwrap(), doc.clone());
            if let ResultBlock::Dual { basis, .. } = &doc.result {
                let ys: Vec<String> = (1..=2).map(|i| format!("y{i}")).collect();
                let parsed = reparse(&ys, basis).unwrap();
                prop_assert_eq!(parsed.len(), doc.profile.length);
            }
        }
    }
}
