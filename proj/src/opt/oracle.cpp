#include "hetsim/opt/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace hetsim::opt {

double oracle_search_space(const net::Scenario& s) {
    return std::pow(s.num_users() + 1.0, s.total_prbs());
}

namespace {

struct Enumerator {
    const net::Scenario& s;
    const net::ChannelRealization& ch;
    const OracleObjective& obj;
    int K, N, B, n_slots, cap;
    std::vector<int> slot_user;    // per slot, -1 = unused
    std::vector<int> held;         // per user
    OracleResult best;
    std::vector<std::uint8_t> x;

    Enumerator(const net::Scenario& s_, const net::ChannelRealization& ch_,
               const OracleObjective& obj_)
        : s(s_), ch(ch_), obj(obj_) {
        K = s.num_users();
        N = s.prbs_per_bs;
        B = s.num_bs();
        n_slots = N * B;
        cap = s.max_prbs_per_user();
        slot_user.assign(n_slots, -1);
        held.assign(K, 0);
        x.assign(static_cast<std::size_t>(K) * N * B, 0);
    }

    void evaluate() {
        best.assignments_examined += 1;
        std::fill(x.begin(), x.end(), 0);
        for (int slot = 0; slot < n_slots; ++slot) {
            if (slot_user[slot] >= 0) {
                const int n = slot / B, b = slot % B;
                x[ch.knb(slot_user[slot], n, b)] = 1;
            }
        }
        std::vector<double> sinr(K, 0.0);
        for (int slot = 0; slot < n_slots; ++slot) {
            const int k = slot_user[slot];
            if (k < 0) continue;
            const int n = slot / B, b = slot % B;
            sinr[k] += sinr_direct(x, ch, k, n, b);
        }
        double value = 0.0;
        for (int k = 0; k < K; ++k) {
            const bool is_op = s.is_outpatient(k);
            switch (obj.approach) {
                case Approach::WSRMax:
                    value += obj.up[k] * sinr[k];
                    break;
                case Approach::PF:
                case Approach::ReliabilityPF:
                    if (obj.approach == Approach::ReliabilityPF && !is_op &&
                        sinr[k] < obj.psi) {
                        return;  // violates the reliability floor
                    }
                    if (obj.prioritized && is_op) {
                        value += obj.up[k] * sinr[k];
                    } else {
                        value += std::log(sinr[k]);
                    }
                    break;
            }
        }
        const double tie_tol = 1e-12 * std::max(1.0, std::abs(value));
        if (!best.feasible || value > best.objective + tie_tol) {
            best.feasible = true;
            best.objective = value;
            best.x = x;
            best.sinr = sinr;
        } else if (value > best.objective - tie_tol && x > best.x) {
            // A lexicographically larger bitmap assigns its earliest
            // (k, n, b) triples first, i.e. the smaller assignment list.
            best.x = x;
            best.sinr = sinr;
        }
    }

    void recurse(int slot, int unserved) {
        if (n_slots - slot < unserved) return;  // cannot serve everyone anymore
        if (slot == n_slots) {
            if (unserved == 0) evaluate();
            return;
        }
        // Leave the slot empty.
        recurse(slot + 1, unserved);
        for (int k = 0; k < K; ++k) {
            if (held[k] >= cap) continue;
            slot_user[slot] = k;
            held[k] += 1;
            recurse(slot + 1, unserved - (held[k] == 1 ? 1 : 0));
            held[k] -= 1;
            slot_user[slot] = -1;
        }
    }
};

}  // namespace

OracleResult oracle_assign(const net::Scenario& s, const net::ChannelRealization& ch,
                           const OracleObjective& objective) {
    if (static_cast<int>(objective.up.size()) != s.num_users()) {
        throw std::invalid_argument("oracle_assign: priority vector size mismatch");
    }
    const double space = oracle_search_space(s);
    if (space > 1e7) {
        throw std::invalid_argument("oracle_assign: search space " + std::to_string(space) +
                                    " exceeds the 1e7 guard");
    }
    Enumerator e(s, ch, objective);
    e.recurse(0, s.num_users());
    return e.best;
}

}  // namespace hetsim::opt
