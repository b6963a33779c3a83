fn main() {
    std::process::exit(pipedream::cli::run(std::env::args_os()));
}
