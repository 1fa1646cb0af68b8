#include <qalg/run.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv)
{
    CLI::App app{"qalg: exact truncated-graded-algebra computations"};

    std::string input, output, task;
    qalg::RunFlags flags;
    app.add_option("--input", input, "problem document (JSON)")->required();
    app.add_option("--task", task, "override the document task");
    app.add_option("--max-degree", flags.max_degree, "override the ring truncation degree");
    app.add_option("--arity", flags.arity, "override arity / exponent caps");
    app.add_option("--threads", flags.threads, "OpenMP thread count");
    app.add_option("--output", output, "report path (default stdout)");
    CLI11_PARSE(app, argc, argv);
    flags.task = task;

    std::ifstream in(input, std::ios::binary);
    if (!in) {
        std::cerr << "cannot open input file: " << input << "\n";
        return 1;
    }
    std::ostringstream buf;
    buf << in.rdbuf();

    qalg::RunResult res = qalg::run_document(buf.str(), flags);

    if (output.empty()) {
        std::cout << res.report;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << output << "\n";
            return 1;
        }
        out << res.report;
    }
    return res.exit_code;
}
