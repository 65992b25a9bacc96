fn main() {
    let status = qgamma_cli::run(std::env::args_os());
    std::process::exit(status as i32);
}
