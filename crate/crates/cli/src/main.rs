fn main() {
    std::process::exit(localdkw_cli::run(std::env::args_os()));
}
