#include "vloc/scan.hpp"

#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "vloc/liouvillian.hpp"
#include "vloc/steady_state.hpp"

namespace vloc {

double susceptibility_at(const SystemParams& base, const StandingWaveSpec& wave,
                         double x, double y) {
  wave.validate();
  SystemParams local = base;
  local.omega_c = standing_wave_rabi(x, y, wave);
  if (!(local.omega_p > 0.0))
    throw RangeError("susceptibility requires omega_p > 0");
  try {
    const SteadyStateSolution sol = steady_state(build_liouvillian(local));
    return std::imag(sol.rho.rho(0, 2)) / local.omega_p;
  } catch (const SolverError& e) {
    std::ostringstream msg;
    msg << e.what() << " at (x, y) = (" << x << ", " << y << ")";
    throw SolverError(msg.str());
  }
}

LocalizationMap scan_map(const SystemParams& base, const StandingWaveSpec& wave,
                         const GridSpec& grid, int n_threads) {
  grid.validate();
  wave.validate();

  LocalizationMap map;
  map.grid = grid;
  map.base = base;
  map.wave = wave;
  map.values.assign(static_cast<size_t>(grid.nx) * grid.ny, 0.0);

  auto run_rows = [&](int j_begin, int j_end, std::exception_ptr& err) {
    try {
      for (int j = j_begin; j < j_end; ++j) {
        const double y = grid.y(j);
        for (int i = 0; i < grid.nx; ++i)
          map.values[static_cast<size_t>(j) * grid.nx + i] =
              susceptibility_at(base, wave, grid.x(i), y);
      }
    } catch (...) {
      err = std::current_exception();
    }
  };

  if (n_threads <= 1) {
    std::exception_ptr err;
    run_rows(0, grid.ny, err);
    if (err) std::rethrow_exception(err);
    return map;
  }

  const int workers = std::min(n_threads, grid.ny);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errs(workers);
  const int chunk = (grid.ny + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int j0 = w * chunk;
    const int j1 = std::min(grid.ny, j0 + chunk);
    pool.emplace_back(run_rows, j0, j1, std::ref(errs[w]));
  }
  for (auto& t : pool) t.join();
  for (auto& err : errs)
    if (err) std::rethrow_exception(err);
  return map;
}

}  // namespace vloc
