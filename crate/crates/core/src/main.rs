fn main() {
    let argv: Vec<String> = std::env::args().collect();
    std::process::exit(gl3branch::cli::run_command(&argv));
}
