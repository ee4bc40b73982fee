use std::process::{Command, Output};

use tenfold_cli::{execute, parse_args};

fn tenfold(args: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tenfold")).args(args.split_whitespace()).output().expect("spawn tenfold")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn run_lib(args: &str) -> (i32, String, String) {
    let cfg = parse_args(std::iter::once("tenfold").chain(args.split_whitespace())).unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = execute(&cfg, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn table_is_a_self_test() {
    let o = tenfold("table");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.split_whitespace().eq(["DIII", "Z2", "Z2", "Z"])));

    let (code, json, _) = run_lib("table --format json");
    assert_eq!(code, 0);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 24);
    let aii2 = rows.iter().find(|r| r["class"] == "AII" && r["d"] == 2).unwrap();
    assert_eq!(aii2["group"], "Z2");
    assert_eq!(aii2["ko_label"], -2);
    assert_eq!(aii2["index_tag"], "ch1^(2)(w)_{2->1}");
    let keys: Vec<&String> = aii2.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["class", "d", "group", "ko_label", "index_tag"]);

    let (_, csv, _) = run_lib("table --format csv");
    assert_eq!(csv.lines().next(), Some("class,d,group,ko_label,index_tag"));
    assert_eq!(csv.lines().count(), 25);
}

#[test]
fn kr_groups() {
    assert_eq!(stdout(&tenfold("kr --space torus --i 4 --d 3 --reduced")), "Z2^4\n");
    assert_eq!(run_lib("kr --space torus --i 1 --d 3 --reduced --kq").1, "Z^3 + Z2\n");
    assert_eq!(
        run_lib("kr --space sphere --i -2 --d 1 --reduced").1,
        run_lib("kr --space sphere --i 6 --d 1 --reduced").1
    );
    // S^{1,0} is two points
    assert_eq!(run_lib("kr --space sphere --i 0 --d 0").1, "Z^2\n");
}

#[test]
fn classify_reports_witnesses() {
    let o = tenfold("classify --model d_id_wave --set mu=2,t=1,dxy=1,dx2y2=1 --grid 24");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "C (PHS −1 witness: −iτ_yK)\n");

    let (_, text, _) = run_lib("classify --model kitaev_chain --set mu=0.5,t=1,delta=1 --grid 16");
    assert!(text.starts_with("BDI ("));
    assert!(text.contains("consistent classes: BDI, D"));
}

#[test]
fn invariant_values_and_exit_codes() {
    let (code, text, _) = run_lib("invariant --model chiral_p_wave --set mu=2,t=1,pd=1 --grid 24 --class D");
    assert_eq!(code, 0);
    assert!(text.contains("kind=Integer value=-1 ") || text.contains("kind=Integer value=1 "), "{text}");

    let (_, json, _) =
        run_lib("invariant --model kitaev_chain --set mu=0.5,t=1,delta=1 --grid 32 --class D --format json");
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["kind"], "Mod2");
    assert_eq!(v["value"], 1);
    assert_eq!(v["grid"], 32);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["class", "kind", "value", "raw", "grid", "residual"]);

    // exactly at the transition
    assert_eq!(tenfold("invariant --model kitaev_chain --set mu=1,t=1,delta=1 --grid 32").status.code(), Some(4));
    // too coarse for the 3d winding
    assert_eq!(tenfold("invariant --model dirac_3d_chiral --set m=2 --grid 16 --class DIII").status.code(), Some(5));
    assert_eq!(tenfold("invariant --model dirac_3d_chiral --set m=2 --grid 31").status.code(), Some(2));
    assert_eq!(tenfold("invariant --spec /no/such/file.toml").status.code(), Some(3));
}

#[test]
fn sweep_rows_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let args = format!(
        "sweep --model kitaev_chain --set mu=0,t=1,delta=1 --axis mu --range -2:2:0.05 --grid 32 --out {}",
        path.display()
    );
    let o = tenfold(&args);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "param,kind,value,raw,residual,gap");
    assert_eq!(lines.len(), 1 + 81);
    assert!(!csv.contains('\r'));
    let gapless: Vec<&str> = lines.iter().filter(|l| l.contains(",gapless,")).copied().collect();
    assert_eq!(gapless.len(), 2, "{gapless:?}");
    assert!(lines.iter().any(|l| l.starts_with("0,Integer,")));

    let again = stdout(&tenfold(&args.replace(&format!(" --out {}", path.display()), "")));
    assert_eq!(again, csv);
}

#[test]
fn spec_file_models() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("chain.toml");
    std::fs::write(
        &path,
        r#"
[model]
name = "chain"
dim = 1
terms = ["-mu*pauli:z", "-t*cos(kx)*pauli:z", "delta*sin(kx)*pauli:y"]

[params]
mu = 0.5
t = 1
delta = 1

[symmetry.phs]
u = "pauli:x"

[symmetry.cs]
u = "pauli:x"
"#,
    )
    .unwrap();
    let spec = path.display();
    // PHS + CS forces TRS = S·C, so the class is BDI
    let (code, text, _) = run_lib(&format!("classify --spec {spec} --grid 16"));
    assert_eq!(code, 0);
    assert!(text.starts_with("BDI"), "{text}");

    let (_, text, _) = run_lib(&format!("invariant --spec {spec} --grid 32"));
    assert!(text.contains("kind=Integer") && (text.contains("value=-1") || text.contains("value=1")), "{text}");
    let (_, text, _) = run_lib(&format!("invariant --spec {spec} --grid 32 --set mu=3"));
    assert!(text.contains("value=0"), "{text}");

    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[model]\nname = \"x\"\ndim = 1\nterms = [\"mu*z\"]\n").unwrap();
    assert_eq!(tenfold(&format!("classify --spec {}", bad.display())).status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert_eq!(tenfold("--help").status.code(), Some(0));
    assert_eq!(tenfold("sweep --nonsense").status.code(), Some(2));
}
