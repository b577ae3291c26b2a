//! Drive the command-line front end in-process, with a config file.

use harmonic_trinomial::cli::{run, CliConfig, Format};

fn main() {
    let mut cfg = CliConfig::default();
    cfg.format = Format::Text;
    cfg.oracle.density = 2;
    let path = std::env::temp_dir().join("trinomial-example.conf");
    std::fs::write(&path, cfg.to_config_string()).expect("write config");
    println!("config:\n{}", cfg.to_config_string());

    let inst = "--a 1,0 --b 3,0 --c 1,0 --n 2 --m 1";
    for cmd in ["count --r 2", "scan --jumps", "regions", "verify"] {
        let line = format!("{cmd} {inst} --config {}", path.display());
        let out = run(std::iter::once("trinomial").chain(line.split_whitespace()));
        println!("$ trinomial {cmd} ...  (exit {})\n{}{}", out.code, out.stdout, out.stderr);
    }
    let _ = std::fs::remove_file(path);
}
