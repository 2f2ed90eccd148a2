// Copyright 2026 The surfsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "surfsim/matching.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace surfsim {

namespace {

// Port of Joris van Rantwijk's reference implementation. Vertex duals are stored doubled so
// that all arithmetic stays integral (weights are doubled on entry).
class Blossom {
   public:
    Blossom(size_t n, const std::vector<WeightedEdge> &edges, bool max_cardinality)
        : nv_(int(n)), max_card_(max_cardinality) {
        for (const auto &e : edges) {
            edges_.push_back({int(e.u), int(e.v), 2 * e.w});
        }
        int ne = int(edges_.size());
        int64_t maxweight = 0;
        for (const auto &e : edges_) {
            maxweight = std::max(maxweight, e.w);
        }
        endpoint_.resize(2 * ne);
        neighbend_.assign(nv_, {});
        for (int k = 0; k < ne; k++) {
            endpoint_[2 * k] = edges_[k].i;
            endpoint_[2 * k + 1] = edges_[k].j;
            neighbend_[edges_[k].i].push_back(2 * k + 1);
            neighbend_[edges_[k].j].push_back(2 * k);
        }
        mate_.assign(nv_, -1);
        label_.assign(2 * nv_, 0);
        labelend_.assign(2 * nv_, -1);
        inblossom_.resize(nv_);
        for (int i = 0; i < nv_; i++) {
            inblossom_[i] = i;
        }
        blossomparent_.assign(2 * nv_, -1);
        blossomchilds_.assign(2 * nv_, {});
        blossombase_.assign(2 * nv_, -1);
        for (int i = 0; i < nv_; i++) {
            blossombase_[i] = i;
        }
        blossomendps_.assign(2 * nv_, {});
        bestedge_.assign(2 * nv_, -1);
        blossombestedges_.assign(2 * nv_, {});
        has_bestedges_.assign(2 * nv_, false);
        for (int b = 2 * nv_ - 1; b >= nv_; b--) {
            unused_.push_back(b);
        }
        std::reverse(unused_.begin(), unused_.end());
        dualvar_.assign(2 * nv_, 0);
        for (int i = 0; i < nv_; i++) {
            dualvar_[i] = maxweight;
        }
        allowedge_.assign(ne, false);
    }

    std::vector<int32_t> run() {
        if (edges_.empty()) {
            return std::vector<int32_t>(nv_, -1);
        }
        for (int t = 0; t < nv_; t++) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = nv_; b < 2 * nv_; b++) {
                blossombestedges_[b].clear();
                has_bestedges_[b] = false;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), false);
            queue_.clear();
            for (int v = 0; v < nv_; v++) {
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) {
                    assign_label(v, 1, -1);
                }
            }
            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    int v = queue_.back();
                    queue_.pop_back();
                    for (int p : neighbend_[v]) {
                        int k = p / 2;
                        int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) {
                            continue;
                        }
                        int64_t kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) {
                                allowedge_[k] = true;
                            }
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
                                bestedge_[b] = k;
                            }
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
                                bestedge_[w] = k;
                            }
                        }
                    }
                }
                if (augmented) {
                    break;
                }
                int deltatype = -1;
                int64_t delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;
                if (!max_card_) {
                    deltatype = 1;
                    delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_);
                }
                for (int v = 0; v < nv_; v++) {
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        int64_t d = slack(bestedge_[v]);
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * nv_; b++) {
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        int64_t kslack = slack(bestedge_[b]);
                        if (kslack % 2 != 0) {
                            throw std::logic_error("blossom matching lost integrality");
                        }
                        int64_t d = kslack / 2;
                        if (deltatype == -1 || d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = nv_; b < 2 * nv_; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        (deltatype == -1 || dualvar_[b] < delta)) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                if (deltatype == -1) {
                    deltatype = 1;
                    delta = std::max<int64_t>(0, *std::min_element(dualvar_.begin(), dualvar_.begin() + nv_));
                }
                for (int v = 0; v < nv_; v++) {
                    if (label_[inblossom_[v]] == 1) {
                        dualvar_[v] -= delta;
                    } else if (label_[inblossom_[v]] == 2) {
                        dualvar_[v] += delta;
                    }
                }
                for (int b = nv_; b < 2 * nv_; b++) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) {
                            dualvar_[b] += delta;
                        } else if (label_[b] == 2) {
                            dualvar_[b] -= delta;
                        }
                    }
                }
                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = true;
                    int i = edges_[deltaedge].i;
                    int j = edges_[deltaedge].j;
                    if (label_[inblossom_[i]] == 0) {
                        std::swap(i, j);
                    }
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = true;
                    queue_.push_back(edges_[deltaedge].i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }
            if (!augmented) {
                break;
            }
            for (int b = nv_; b < 2 * nv_; b++) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dualvar_[b] == 0) {
                    expand_blossom(b, true);
                }
            }
        }
        std::vector<int32_t> out(nv_, -1);
        for (int v = 0; v < nv_; v++) {
            if (mate_[v] >= 0) {
                out[v] = endpoint_[mate_[v]];
            }
        }
        return out;
    }

   private:
    struct Edge {
        int i;
        int j;
        int64_t w;
    };

    int64_t slack(int k) const { return dualvar_[edges_[k].i] + dualvar_[edges_[k].j] - 2 * edges_[k].w; }

    void leaves(int b, std::vector<int> &out) const {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) {
            leaves(t, out);
        }
    }

    std::vector<int> leaves(int b) const {
        std::vector<int> out;
        leaves(b, out);
        return out;
    }

    void assign_label(int w, int t, int p) {
        int b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            leaves(b, queue_);
        } else if (t == 2) {
            int base = blossombase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
                break;
            }
            path.push_back(b);
            label_[b] = 5;
            if (labelend_[b] == -1) {
                v = -1;
            } else {
                v = endpoint_[labelend_[b]];
                b = inblossom_[v];
                v = endpoint_[labelend_[b]];
            }
            if (w != -1) {
                std::swap(v, w);
            }
        }
        for (int b : path) {
            label_[b] = 1;
        }
        return base;
    }

    void add_blossom(int base, int k) {
        int v = edges_[k].i;
        int w = edges_[k].j;
        int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        int b = unused_.back();
        unused_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        auto &path = blossomchilds_[b];
        auto &endps = blossomendps_[b];
        path.clear();
        endps.clear();
        while (bv != bb) {
            blossomparent_[bv] = b;
            path.push_back(bv);
            endps.push_back(labelend_[bv]);
            v = endpoint_[labelend_[bv]];
            bv = inblossom_[v];
        }
        path.push_back(bb);
        std::reverse(path.begin(), path.end());
        std::reverse(endps.begin(), endps.end());
        endps.push_back(2 * k);
        while (bw != bb) {
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (int leaf : leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) {
                queue_.push_back(leaf);
            }
            inblossom_[leaf] = b;
        }
        std::vector<int> bestedgeto(2 * nv_, -1);
        for (int child : path) {
            std::vector<std::vector<int>> nblists;
            if (!has_bestedges_[child]) {
                for (int leaf : leaves(child)) {
                    std::vector<int> list;
                    for (int p : neighbend_[leaf]) {
                        list.push_back(p / 2);
                    }
                    nblists.push_back(std::move(list));
                }
            } else {
                nblists.push_back(blossombestedges_[child]);
            }
            for (const auto &nblist : nblists) {
                for (int kk : nblist) {
                    int i = edges_[kk].i;
                    int j = edges_[kk].j;
                    if (inblossom_[j] == b) {
                        std::swap(i, j);
                    }
                    int bj = inblossom_[j];
                    if (bj != b && label_[bj] == 1 && (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                        bestedgeto[bj] = kk;
                    }
                }
            }
            blossombestedges_[child].clear();
            has_bestedges_[child] = false;
            bestedge_[child] = -1;
        }
        blossombestedges_[b].clear();
        for (int kk : bestedgeto) {
            if (kk != -1) {
                blossombestedges_[b].push_back(kk);
            }
        }
        has_bestedges_[b] = true;
        bestedge_[b] = -1;
        for (int kk : blossombestedges_[b]) {
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) {
                bestedge_[b] = kk;
            }
        }
    }

    void expand_blossom(int b, bool endstage) {
        std::vector<int> childs = blossomchilds_[b];
        for (int s : childs) {
            blossomparent_[s] = -1;
            if (s < nv_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : leaves(s)) {
                    inblossom_[leaf] = s;
                }
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto &ch = blossomchilds_[b];
            const auto &ep = blossomendps_[b];
            int len = int(ch.size());
            auto at = [len](int j) { return ((j % len) + len) % len; };
            int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = int(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
            int jstep;
            int endptrick;
            if (j & 1) {
                j -= len;
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[ep[at(j - endptrick)] ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[ep[at(j - endptrick)] / 2] = true;
                j += jstep;
                p = ep[at(j - endptrick)] ^ endptrick;
                allowedge_[p / 2] = true;
                j += jstep;
            }
            int bv = ch[at(j)];
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (ch[at(j)] != entrychild) {
                bv = ch[at(j)];
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int found = -1;
                for (int leaf : leaves(bv)) {
                    if (label_[leaf] != 0) {
                        found = leaf;
                        break;
                    }
                }
                if (found >= 0) {
                    label_[found] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(found, 2, labelend_[found]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        has_bestedges_[b] = false;
        bestedge_[b] = -1;
        unused_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) {
            t = blossomparent_[t];
        }
        if (t >= nv_) {
            augment_blossom(t, v);
        }
        auto &ch = blossomchilds_[b];
        auto &ep = blossomendps_[b];
        int len = int(ch.size());
        auto at = [len](int j) { return ((j % len) + len) % len; };
        int i = int(std::find(ch.begin(), ch.end(), t) - ch.begin());
        int j = i;
        int jstep;
        int endptrick;
        if (i & 1) {
            j -= len;
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = ch[at(j)];
            int p = ep[at(j - endptrick)] ^ endptrick;
            if (t >= nv_) {
                augment_blossom(t, endpoint_[p]);
            }
            j += jstep;
            t = ch[at(j)];
            if (t >= nv_) {
                augment_blossom(t, endpoint_[p ^ 1]);
            }
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(ch.begin(), ch.begin() + i, ch.end());
        std::rotate(ep.begin(), ep.begin() + i, ep.end());
        blossombase_[b] = blossombase_[ch[0]];
    }

    void augment_matching(int k) {
        int v = edges_[k].i;
        int w = edges_[k].j;
        for (auto [s, p] : {std::pair{v, 2 * k + 1}, std::pair{w, 2 * k}}) {
            while (true) {
                int bs = inblossom_[s];
                if (bs >= nv_) {
                    augment_blossom(bs, s);
                }
                mate_[s] = p;
                if (labelend_[bs] == -1) {
                    break;
                }
                int t = endpoint_[labelend_[bs]];
                int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= nv_) {
                    augment_blossom(bt, j);
                }
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int nv_;
    bool max_card_;
    std::vector<Edge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<int> unused_;
    std::vector<int64_t> dualvar_;
    std::vector<bool> allowedge_;
    std::vector<int> queue_;
};

}  // namespace

std::vector<int32_t> max_weight_matching(size_t num_vertices, const std::vector<WeightedEdge> &edges,
                                         bool max_cardinality) {
    for (const auto &e : edges) {
        if (e.u >= num_vertices || e.v >= num_vertices || e.u == e.v) {
            throw std::invalid_argument("bad edge in matching graph");
        }
    }
    return Blossom(num_vertices, edges, max_cardinality).run();
}

Matching min_weight_perfect_matching(size_t num_vertices, const std::vector<WeightedEdge> &edges) {
    if (num_vertices % 2 != 0) {
        throw std::invalid_argument("perfect matching needs an even number of vertices");
    }
    Matching result;
    if (num_vertices == 0) {
        return result;
    }
    int64_t top = 0;
    for (const auto &e : edges) {
        top = std::max(top, e.w);
    }
    top += 1;
    std::vector<WeightedEdge> flipped;
    flipped.reserve(edges.size());
    for (const auto &e : edges) {
        flipped.push_back({e.u, e.v, top - e.w});
    }
    auto mate = max_weight_matching(num_vertices, flipped, true);
    for (uint32_t v = 0; v < num_vertices; v++) {
        if (mate[v] < 0) {
            throw std::invalid_argument("graph has no perfect matching");
        }
        if (uint32_t(mate[v]) > v) {
            result.pairs.push_back({v, uint32_t(mate[v])});
        }
    }
    // Weight of the chosen pairs using the lightest parallel edge.
    std::unordered_map<uint64_t, int64_t> lightest;
    for (const auto &e : edges) {
        uint64_t key = uint64_t(std::min(e.u, e.v)) * num_vertices + std::max(e.u, e.v);
        auto [it, fresh] = lightest.emplace(key, e.w);
        if (!fresh) {
            it->second = std::min(it->second, e.w);
        }
    }
    for (auto [u, v] : result.pairs) {
        result.weight += lightest.at(uint64_t(u) * num_vertices + v);
    }
    return result;
}

}  // namespace surfsim
