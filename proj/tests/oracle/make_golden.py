#!/usr/bin/env python3
"""Generates the frozen golden (word -> stem) pairs from the reference stemmer.

Output: tests/data/golden_stems.tsv. The pair set mixes hand-picked affixed
forms covering every rule family (plain prefixes, ber-/ter-/me-/pe- variants
with recoding, suffix chains, precedence words, loop-back words), programmatic
derivations with standard nasal assimilation, bare dictionary roots, and
out-of-vocabulary words that must pass through unchanged.
"""

import os
import random

from ecs_reference import ReferenceStemmer

HERE = os.path.dirname(os.path.abspath(__file__))
ROOT = os.path.normpath(os.path.join(HERE, "..", ".."))

HAND_PICKED = """
bermain bekerja belajar berolahraga berjalan berlari berbagi bersama berubah berangkat beranggapan
terbaik terburuk terlihat terdengar terasa terpercaya tersenyum terharu terjatuh terkenal tertipu
melihat merasa menyanyi membaca membawa membuat memakai memilih menulis menilai mencari menjadi
mendengar mendengarkan menggunakan menghapus mengambil mengirim mengecek mengetik menghibur mengkaji
menyukai menyanyikan menyimpan menyambut memperbaiki mempermainkan memperhatikan mempengaruhi
memutar memuat memesan memaksa menaikkan meletakkan mengharapkan menghilang menunggu menonton
pemain pembaca penulis penyanyi pencari pendengar pengguna penggemar pengirim pengaturan
pekerja pelukis pelari petani pemberitahuan pembayaran pembaruan perbaikan pergerakan permainan
kesalahan kemampuan keamanan kenyamanan keadilan kebaikan keburukan kehilangan kecepatan kelambatan
disukai dimakan dibuka diputar dihapus dipakai diperbaiki diperbarui dibayar didukung
sebaiknya sebenarnya selamanya seharusnya sepenuhnya
lagunya aplikasinya iklannya fiturnya suaranya tampilannya kualitasnya masalahnya bagusnya jeleknya
bukunyalah mainkanlah dengarkanlah baguskah cepatlah
memukuli mengajari menyakiti menghargai memiliki mengetahui mengalami menikmati
berdasarkan keseluruhan penyimpanan pemutaran pemutara penyempurnaan
lambatnya cepatnya mudahnya sulitnya
"""

OOV_WORDS = """
zzzgarbage qwerty spotifyku wkwkwk anjay gajelas xyzabc foobar streamingan bufferingnya
"""


def nasal_me(root):
    c = root[0]
    if c in "aiueo" or c in "ghqk":
        return "meng" + (root[1:] if c == "k" else root)
    if c in "bfv":
        return "mem" + root
    if c == "p":
        return "mem" + root[1:]
    if c in "cdjz":
        return "men" + root
    if c == "t":
        return "men" + root[1:]
    if c == "s":
        return "meny" + root[1:]
    if c in "lrwy" or c in "mn":
        return "me" + root
    return "me" + root


def main():
    roots_path = os.path.join(ROOT, "core", "data", "rootwords.txt")
    with open(roots_path, encoding="utf-8") as f:
        roots = [line.strip() for line in f if line.strip()]
    stemmer = ReferenceStemmer(roots)

    words = []
    seen = set()

    def add(w):
        w = w.strip().lower()
        if w and w not in seen:
            seen.add(w)
            words.append(w)

    for w in HAND_PICKED.split():
        add(w)

    rng = random.Random(42)
    sampled = rng.sample([r for r in roots if len(r) >= 4 and r.isalpha()], 90)
    for i, r in enumerate(sampled):
        form = i % 6
        if form == 0:
            add("ber" + r)
        elif form == 1:
            add(nasal_me(r))
        elif form == 2:
            add(r + "nya")
        elif form == 3:
            add("ke" + r + "an")
        elif form == 4:
            add("di" + r + "kan")
        else:
            add(nasal_me(r) + "kan")

    for r in rng.sample(roots, 30):
        add(r)

    for w in OOV_WORDS.split():
        add(w)

    out_path = os.path.join(ROOT, "tests", "data", "golden_stems.tsv")
    with open(out_path, "w", encoding="utf-8") as f:
        for w in words:
            f.write(f"{w}\t{stemmer.stem(w)}\n")
    print(f"wrote {len(words)} pairs to {out_path}")


if __name__ == "__main__":
    main()
