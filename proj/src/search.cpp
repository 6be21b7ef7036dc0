#include <crcforge/parameters.hpp>
#include <crcforge/search.hpp>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace crcforge {

auto default_thread_count() -> unsigned
{
    if (const char * env = std::getenv("CRC_FORGE_THREADS")) {
        char * end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0)
            return static_cast<unsigned>(value);
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

namespace {
    struct Target {
        int gamma;
        int beta;
        int code_size;
        /// Required codewords per hyperface, when that prune is active.
        std::optional<int> hyperface_size;
    };

    struct Task {
        std::size_t target;
        /// Values for vertices 0 and 1.
        bool first;
        bool second;
    };

    /// Immutable adjacency data shared by all workers.
    struct Layout {
        int vertex_count;
        int valency;
        int hyperface_count;
        int hyperface_capacity;
        std::vector<std::vector<int>> neighbors;
        std::vector<std::vector<int>> hyperfaces;

        explicit Layout(const Space & space) :
            vertex_count(static_cast<int>(space.vertex_count())),
            valency(space.valency()),
            hyperface_count(space.n() * space.q()),
            hyperface_capacity(static_cast<int>(space.vertex_count()) / space.q()),
            neighbors(static_cast<std::size_t>(vertex_count)),
            hyperfaces(static_cast<std::size_t>(vertex_count))
        {
            for (int v = 0; v < vertex_count; ++v) {
                auto uv = static_cast<std::size_t>(v);
                space.for_each_neighbor(static_cast<VertexIndex>(v),
                    [&](VertexIndex w) { neighbors[uv].push_back(static_cast<int>(w)); });
                for (int p = 0; p < space.n(); ++p)
                    hyperfaces[uv].push_back(p * space.q() + static_cast<int>(space.symbol(static_cast<VertexIndex>(v), p)));
            }
        }
    };

    class Worker {
    public:
        Worker(const Space & space, const Layout & layout, const std::atomic<bool> & stop) :
            _space(space),
            _layout(layout),
            _stop(stop),
            _state(static_cast<std::size_t>(layout.vertex_count), unassigned),
            _in(static_cast<std::size_t>(layout.vertex_count), 0),
            _out(static_cast<std::size_t>(layout.vertex_count), 0),
            _hf_in(static_cast<std::size_t>(layout.hyperface_count), 0),
            _hf_assigned(static_cast<std::size_t>(layout.hyperface_count), 0)
        {
        }

        /// Explores the subtree below the task's two fixed decisions.
        template <typename OnCode>
        auto run(const Target & target, const Task & task, OnCode && on_code) -> std::uint64_t
        {
            _target = &target;
            _nodes = 0;
            if (assign(0, task.first)) {
                if (assign(1, task.second))
                    descend(2, on_code);
                unassign(1);
            }
            unassign(0);
            return _nodes;
        }

    private:
        static constexpr std::int8_t unassigned = -1;

        auto feasible(int w) const -> bool
        {
            auto uw = static_cast<std::size_t>(w);
            int in = _in[uw], out = _out[uw];
            int open = _layout.valency - in - out;
            int gamma = _target->gamma, beta = _target->beta;
            switch (_state[uw]) {
            case 1: return out <= beta && out + open >= beta;
            case 0: return in <= gamma && in + open >= gamma;
            default:
                return (out <= beta && in <= _layout.valency - beta) || (in <= gamma && out <= _layout.valency - gamma);
            }
        }

        /// Sets v and reports whether the partial assignment stays consistent.
        /// Always leaves v assigned; callers undo with unassign.
        auto assign(int v, bool member) -> bool
        {
            auto uv = static_cast<std::size_t>(v);
            _state[uv] = member ? 1 : 0;
            auto & counts = member ? _in : _out;
            for (int w : _layout.neighbors[uv])
                ++counts[static_cast<std::size_t>(w)];
            for (int h : _layout.hyperfaces[uv]) {
                ++_hf_assigned[static_cast<std::size_t>(h)];
                if (member)
                    ++_hf_in[static_cast<std::size_t>(h)];
            }
            _members += member ? 1 : 0;
            ++_assigned;

            if (_members > _target->code_size || _members + (_layout.vertex_count - _assigned) < _target->code_size)
                return false;
            if (_target->hyperface_size) {
                int want = *_target->hyperface_size;
                for (int h : _layout.hyperfaces[uv]) {
                    auto uh = static_cast<std::size_t>(h);
                    if (_hf_in[uh] > want || _hf_in[uh] + (_layout.hyperface_capacity - _hf_assigned[uh]) < want)
                        return false;
                }
            }
            if (! feasible(v))
                return false;
            for (int w : _layout.neighbors[uv])
                if (! feasible(w))
                    return false;
            return true;
        }

        void unassign(int v)
        {
            auto uv = static_cast<std::size_t>(v);
            bool member = _state[uv] == 1;
            auto & counts = member ? _in : _out;
            for (int w : _layout.neighbors[uv])
                --counts[static_cast<std::size_t>(w)];
            for (int h : _layout.hyperfaces[uv]) {
                --_hf_assigned[static_cast<std::size_t>(h)];
                if (member)
                    --_hf_in[static_cast<std::size_t>(h)];
            }
            _members -= member ? 1 : 0;
            --_assigned;
            _state[uv] = unassigned;
        }

        template <typename OnCode>
        void descend(int v, OnCode & on_code)
        {
            ++_nodes;
            if ((_nodes & 0xFFFF) == 0 && _stop.load(std::memory_order_relaxed))
                return;
            if (v == _layout.vertex_count) {
                Bitset bits(static_cast<std::size_t>(_layout.vertex_count));
                for (int w = 0; w < _layout.vertex_count; ++w)
                    if (_state[static_cast<std::size_t>(w)] == 1)
                        bits.set(static_cast<std::size_t>(w));
                on_code(Code{_space, std::move(bits)});
                return;
            }
            for (bool member : {true, false}) {
                if (assign(v, member))
                    descend(v + 1, on_code);
                unassign(v);
            }
        }

        const Space & _space;
        const Layout & _layout;
        const std::atomic<bool> & _stop;
        const Target * _target = nullptr;
        std::vector<std::int8_t> _state;
        std::vector<int> _in;
        std::vector<int> _out;
        std::vector<int> _hf_in;
        std::vector<int> _hf_assigned;
        int _members = 0;
        int _assigned = 0;
        std::uint64_t _nodes = 0;
    };

    auto make_targets(const SearchConstraints & constraints) -> std::vector<Target>
    {
        const auto & space = constraints.space;
        int k = space.valency();
        int q = space.q();
        auto vertex_count = static_cast<int>(space.vertex_count());
        std::vector<Target> targets;
        for (int gamma = 1; gamma <= k; ++gamma) {
            if (constraints.gamma && gamma != *constraints.gamma)
                continue;
            for (int beta = 1; beta <= k; ++beta) {
                if (constraints.eigenvalue_index && gamma + beta != q * *constraints.eigenvalue_index)
                    continue;
                if ((vertex_count * gamma) % (gamma + beta) != 0)
                    continue;
                Target t{gamma, beta, vertex_count * gamma / (gamma + beta), std::nullopt};
                if (constraints.eigenvalue_index && *constraints.eigenvalue_index >= 2) {
                    if (t.code_size % q != 0)
                        continue;
                    t.hyperface_size = t.code_size / q;
                }
                targets.push_back(t);
            }
        }
        return targets;
    }
}

auto enumerate_crcs(const SearchConstraints & constraints, const CodeSink & sink) -> SearchSummary
{
    const auto & space = constraints.space;
    if (space.vertex_count() > max_search_vertices)
        throw Error(Errc::space_too_large, "exhaustive search is capped at " + std::to_string(max_search_vertices) +
                " vertices; H(" + std::to_string(space.n()) + "," + std::to_string(space.q()) + ") has " +
                std::to_string(space.vertex_count()));
    if (constraints.eigenvalue_index && (*constraints.eigenvalue_index < 1 || *constraints.eigenvalue_index > space.n()))
        throw Error(Errc::invalid_parameters, "target eigenvalue index must lie in 1..n");

    auto targets = make_targets(constraints);
    std::vector<Task> tasks;
    for (std::size_t t = 0; t < targets.size(); ++t)
        for (bool first : {true, false}) {
            if (constraints.fix_origin && ! first)
                continue;
            for (bool second : {true, false})
                tasks.push_back(Task{t, first, second});
        }

    Layout layout{space};
    std::vector<SearchSummary> partial(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::mutex sink_mutex;
    std::exception_ptr error;

    auto work = [&] {
        Worker worker{space, layout, stop};
        try {
            for (std::size_t i = next++; i < tasks.size() && ! stop; i = next++) {
                const auto & target = targets[tasks[i].target];
                auto & summary = partial[i];
                summary.nodes_visited = worker.run(target, tasks[i], [&](const Code & code) {
                    auto result = check_crc(code);
                    auto cert = std::get_if<CrcCertificate>(&result);
                    if (! cert || cert->rho != 1 || cert->gamma1() != target.gamma || cert->beta0() != target.beta)
                        throw std::logic_error("search emitted a code that fails verification");
                    summary.parameter_sets.insert(ParameterSet{cert->gamma1(), cert->beta0(), cert->eigenvalue_index});
                    ++summary.codes_found;
                    if (! constraints.count_only && sink) {
                        std::lock_guard lock{sink_mutex};
                        sink(code, *cert);
                    }
                });
            }
        }
        catch (...) {
            std::lock_guard lock{sink_mutex};
            if (! error)
                error = std::current_exception();
            stop = true;
        }
    };

    unsigned threads = constraints.threads ? constraints.threads : default_thread_count();
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    if (threads == 1)
        work();
    else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i)
            pool.emplace_back(work);
        for (auto & t : pool)
            t.join();
    }
    if (error)
        std::rethrow_exception(error);

    SearchSummary summary;
    for (auto & p : partial) {
        summary.parameter_sets.insert(p.parameter_sets.begin(), p.parameter_sets.end());
        summary.codes_found += p.codes_found;
        summary.nodes_visited += p.nodes_visited;
    }
    return summary;
}

}
