#!/usr/bin/env python3
"""Assembles the bundled dictionary data files under core/data/.

The root-word list is seeded from common standard-Indonesian vocabulary
(KBBI-style root forms), weighted toward app-review language. The slang
map and stopword list are curated to the documented cardinalities
(124 and 809 entries).
"""

import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.normpath(os.path.join(HERE, "..", "..", "core", "data"))

ROOTS_TEXT = """
abad abadi abai abang abjad abu acak acara acuh ada adab adang adaptasi adat adegan adik adil adon aduh aduk adu
agak agama agen agenda agung agustus ahli air ajaib ajak ajar aji akal akan akar akhir akibat akrab aksara aksen akses aksi
aktif aktivitas akun akurat alam alamat alas alat album alergi aplikasi alih aliran alir alis alun alur amal aman amat ambil
ampun amuk anak analisis ancam andal andai aneh aneka anggap anggar anggota anggur angin angka angkat angkut angsur aniaya
animasi anjur antar antre antri anut apik apung arah arang arah arsip arti artis arus asa asah asal asam asas aset asin
asing asli asuh asumsi asyik atas atur audio awal awam awas awet ayah ayun
baca badan bagai bagi bagus bahan bahas bahaya bahu baik baja bajak baku balap balas balik banding bandingkan bangga bangkit
bangun bantah bantu banyak bapak barang bareng baris baru basah basi basmi batal batas batin batu bau bawa bawah bayang
bayar bayi beda bedah bekal beku bela belah belajar belanja beli belok benah benam benar bencana benci benda bengkak
bentak bentang bentuk bentur berat beres beri berita beruntung besar besok betah betul biar biasa biaya bicara bidang bijak
bijaksana bilang bimbing bina binasa bingung bintang bisik bising bisnis bisu blokir bobol bocor bodoh bohong boikot bom
bongkar boros bosan buai buah buang buat budaya bugar buka bukti buku bulan bulat bunga bungkus bunuh bunyi buru
buruk burung busuk butuh
cabang cabut cacat cadang cahaya cair cakap cakup calon camar campur canggih cantik capai cari cas cat catat catut cecer
cegah cek cekal cela celah celaka cemar cemas cemburu cemerlang cengkeram cepat cerah cerai cerdas cerewet cerita cermat
cermin cetak cicil cinta cipta ciri cium coba cocok colok comot contoh copot coret corong cuaca cuci cuek cukup culik
cuma curang curi curiga cuti
dadak daerah daftar daki dalam damai dampak dampingi dana dandan dengar dapat dapur darat dari darurat dasar data datang
daya debat dekat dekorasi delapan demam demo denda dendam dengki derai derita desa desain desak detail detik dewasa diagnosa
diam didik dikte dinding dingin disiplin dominasi dorong dosa drama dua dubes duduk duga duka dukung dulu dunia
durasi duri dusta duyun
edar edisi efek efektif efisien egois eja ejek ekonomi ekor ekspansi eksperimen ekspor ekspresi elak elektronik elus emas
embun empat enak enam energi engah entas erat eror error erti es esok evaluasi
fajar fakta faktor fasih fasilitas fatal februari festival figur file filter final fisik fitnah fitur fokus formal format
forum foto frustrasi fungsi
gabung gaduh gagah gagal gagas gairah gaji galak galat gambar ganda gandeng ganggu ganjil ganti gantung gapai garansi garap
garis garuk gaul gaya gejala gelap gelar gelas geledah gelisah geluti gema gemar gembira gembok gemetar gemilang gempa
gempar gemuk genap genggam gentar gerah gerak gerbang gerhana gertak gesek geser gesit getar giat gigih gigit gila gilir
giring goda golong goncang gosok goyang gratis gubah gugah gugat gugup gugur gula gulir guna gunting gunung guру guru
habis hadang hadap hadiah hadir hafal hajat hak hakim hal halaman halang halus hambat hampir hancur handal hangat hangus
hantam hantu hapus harap harga hari harmonis harta haru harus hasil hasut hati haus hebat hebring heboh hela helai hemat
hendak hening henti heran hias hibah hibur hidang hidup hijau hilang hilir himpun hina hindar hingga hirup hitam hitung
hormat hubung hujan hukum huni huruf hutan
ibu ide ideal identifikasi identitas idola ijazah ikat iklan iklim ikut ilmu imbang imbau imbuh iming impi impikan impor
inap inci indah indera individu industri info informasi ingat ingin inisiatif input insaf insiden inspirasi instal instruksi
intai integrasi interaksi internet inti intim intip investasi isi istilah istirahat isu isyarat item izin
jabat jadi jadwal jaga jahat jahit jajah jajal jalan jalin jam jamah jamin jangkau janji jantung jarah jarak jarang jaring
jasa jatah jatuh jauh jawab jaya jebak jejak jelajah jelas jelek jelma jemput jenis jenuh jerat jerit jernih jijik jilid
jinak jiplak jitu jual judul juga jujur julang juluk jumlah jumpa junjung jurang jurus justru
kabar kabur kacau kadar kaget kagum kait kaji kalah kalang kalem kali kalimat kalkulasi kamar kampanye kampung kamus kanal kanan
kandas kandung kapal kapasitas karang karantina karat karena kargo karir karsa karya kasar kasih kasus kata kategori kawal
kawan kaya kayuh keadaan kebal kecam kecewa kecil kecoh kecuali kedip kejar keji kejut kelam kelas kelola keluh kemas
kembali kembang kemudi kenal kenang kencang kendala kendali kental kentara kenyang kepala keping keras kerja kerjakan
keringat keren kerut kesal kesan ketat ketik keyakinan khawatir khusus kian kibar kirim kisah klaim klarifikasi
klasifikasi klik koleksi kolom kombinasi komentar kompak kompatibel kompensasi kompetisi komplain kompres komputer komunikasi
koneksi konfirmasi konflik konsep konsisten konsultasi konsumsi kontak konten kontrol konversi koordinasi kopi koreksi
korup korupsi kosong kota kotor kreasi kredit kriteria kritik kuasa kuat kuatir kubur kuliah kumandang kumpul kunci kunjung
kuno kupas kuras kurang kurban kursi kurung kurva kutip
label laboratorium lacak lagu lahir laju lakon laku lalai lalu lama lambat lambung lampau lampir lancar landa langgan
langgar langka langkah langsung lanjut lantai lantun lapang lapar lapis lapor lapuk larang lari laris laut layak layan
layang layar lebar lebih lega legal lejit lekas lekat lelah lelang lemah lemas lembab lembap lembar lembut lempar lemot
lengah lengkap lentur lepas lestari letak letih lewat libat libur licik licin lihat lilit limpah lincah lindung lingkar
lintas lipat liput lirik lisan lobi logika lokal lokasi lolos lompat loncat longgar lontar lowong luang luap luar
lubang lucu ludes lugas luka lukis lumayan lumpuh lunak lunas luntur lupa luput lurus lusa
maaf macam macet madu mahal mahir main maju makan makin makmur maksimal maksud malam malas malu mampu mana mandek
mandi manfaat mantap manual marah maraton mari markas masak masalah masuk mata mati matang mau mawar maya mayoritas media
megah mekar melek memang menang menara mendung mengerti menit menu merdu merek mesin mesra mewah migrasi milik mimpi minat
minggu minim minta minum mirip miskin mitra mobil modal mode model modern modifikasi mogok mohon molor momen monitor monoton
motivasi motor muat muda mudah muka mula mulai mulus mulut muncul mundur mungkin murah murni musik musim musnah mustahil
mutakhir mutu
nada nafas naik nakal nama nanti nasehat nasib nasihat navigasi negara negosiasi nekat nikah nikmat nilai nista nominal
nonaktif nonton normal nota notifikasi nuansa nyala nyaman nyanyi nyaring nyata nyenyak
obat obrak obral obrol observasi obsesi ofensif oke olah olahraga oleh oleng onar operasi opini optimal optimis orang
organisasi orisinal otak otomatis
pacu padam padat padu pagi paham pahit pajang pakai paket paksa palsu pamer pamit panas pandai pandang panduan panen
pangkas pangku panik panjang pantas pantau papar parah parkir partisipasi pasang pasar pasif pasok pasti patah patokan
patuh payah pecah pedas pegal pegang peka pekan pelan pelik pelit peluk pencet pendam pendek penat penting penuh perangkat
peras perban percaya percik perempuan pergi perinci perintah periksa perilaku peristiwa perkara permanen permen pernah
persen pesan pesat pesona pesta petik petunjuk pihak pikat pikir pilah pilih pimpin pindah pinggir pinjam pintar pintas
pintu pisah plafon platform pojok pola poles polos pondasi populer porsi posisi positif potensi potong prakarsa praktik
praktis prediksi premium prestasi pribadi prihatin prima prinsip prioritas privasi pro problem produk produksi profil
profesional progres promo promosi proses protes proyek publik puas puja puji pukul pulang pulih puluh punah puncak punya pupus
pusat pusing putar putih putus
rabat rabun racik racun ragam ragu rahasia raih raja rajin rakit rakus ramah ramai rambah rambat rampas rampung rana
rancang rancu rangkai rangkap rangkul rangsang rantai rapat rapi rasa rata ratap ratus rawan rawat raya
rayu rebut reda redup refleksi regang registrasi rekam rekan rekayasa rekomendasi rekor relasi rela rem remaja rembes
remeh rencana rendah rentan renung reparasi resah resep resmi respon restart restu retak review revisi rezeki rilis rinci
rindu ringan ringkas rintang rintis risau risiko riuh robek roboh romansa rombak rongga rugi rujuk rumah rumit rumus
runding runtuh rusak rutin
saat sabar sadar saing saji sakit saksi sakti salah salin salur sama samar sambung sambut sampah sampai samping sandang
sandar sanding sanggah sanggup sangka santai santun sapa sapu saran sarat saring sasar satu sebab sebar sebut sedap sedia
sedih sedot segan segar sehat sejahtera sejuk sekat sekolah selamat selaras selesai selidik selip seluler semangat sembuh
sembunyi sempat sempit sempurna semua senang sendiri sengaja sengketa sensasi sentil sentuh senyap senyum sepakat sepele
seperti sepi serah serak serang serap serasi serbu seret seri serius serta seru sesal sesuai setel setia setuju sewa
siaga sial siap siar sibuk sidang sifat sikap siksa silang simak simpan simpul sinergi singgah singkat singkir sini sinkron
sinyal sipil siram sisa sisip sistem situs soal sobek sodor sokong solusi sopan sorak sorot sortir sosial spam
spesial stabil stagnan standar status stiker stok stop streaming stres studi subur suara subsidi sudut suguh suka sukar
sukses sulap sulit sumbang sumber sumpah sunyi supaya support surat surut susah susun susut swasta syarat syukur
taat tabah tabrak tabung tafsir tagih tahan tahap tahu tahun tajam takar takjub takluk takut tambah tampan tampil tampung
tanam tanda tangan tangani tangguh tanggung tangis tangkal tangkap tangkas tani tanya tarif tarik taruh tata tawar tawaran
tayang tebak tebal tebar tebus teduh tega tegak tegang tegas tegur teknis tekan teken tekun telaah telan telat teledor
telentang teliti телепон telepon tema teman tembak tembus tempat tempel tempuh temu tenaga tenang tengah tenggelam tentang
tentram tentu tepat tepi terampil terang terap terima terobos terus tetap tetes tikung tik tiba tidur tiga tilik timbang
timbul timbun timpa tindak tindih tingkah tingkat tinggal tinggi tinjau tipis tipu titip titik tobat tolak tolong tonjol
topang topik total transaksi transfer transformasi transisi transparan trauma trendi tua tuai tuang tuduh tugas tuju tujuh
tukar tukang tulis tulus tumbang tumbuh tumpah tumpang tumpu tumpuk tunai tunda tunggu tunggal tunjuk tuntas tuntun tuntut
turun turut tutup tutur
uang uap ubah ubin ucap uji ujung ukir ukur ulang ulas ulet ultimatum umbar umpan umum umur unggah unggul ungkap unik unsur
untung unduh upah upaya upload urai urgensi urus urut usaha usang usap usia usik usir usul usut utama utang utara utuh
vakum valid variasi verifikasi versi video视 visual vital vokal volume
wabah wacana wajah wajar wajib wakil waktu walau wangi warga warna warta wartawan waspada watak wawancara wewenang
wibawa wilayah wisata wujud
yakin yayasan
zaman ziarah zona
"""

SLANG_PAIRS = [
    ("gak", "tidak"), ("ga", "tidak"), ("gk", "tidak"), ("nggak", "tidak"),
    ("ngga", "tidak"), ("enggak", "tidak"), ("tdk", "tidak"), ("kagak", "tidak"),
    ("bgt", "banget"), ("bngt", "banget"),
    ("yg", "yang"), ("dgn", "dengan"), ("dg", "dengan"), ("sm", "sama"),
    ("dr", "dari"), ("utk", "untuk"), ("bwt", "buat"),
    ("krn", "karena"), ("karna", "karena"),
    ("klo", "kalau"), ("kalo", "kalau"), ("kl", "kalau"),
    ("gmn", "bagaimana"), ("gimana", "bagaimana"),
    ("knp", "kenapa"),
    ("udah", "sudah"), ("udh", "sudah"), ("dah", "sudah"), ("sdh", "sudah"),
    ("blm", "belum"), ("belom", "belum"), ("blum", "belum"),
    ("jd", "jadi"), ("jdi", "jadi"), ("jgn", "jangan"),
    ("jg", "juga"), ("aja", "saja"), ("aj", "saja"),
    ("skrg", "sekarang"), ("skrng", "sekarang"),
    ("hrs", "harus"), ("kudu", "harus"),
    ("bs", "bisa"), ("bsa", "bisa"),
    ("dpt", "dapat"), ("dapet", "dapat"),
    ("bgs", "bagus"), ("bgus", "bagus"),
    ("bnyk", "banyak"), ("byk", "banyak"),
    ("dikit", "sedikit"),
    ("tp", "tetapi"), ("tpi", "tetapi"), ("tapi", "tetapi"),
    ("sy", "saya"), ("gw", "saya"), ("gue", "saya"), ("gua", "saya"), ("ane", "saya"),
    ("lu", "kamu"), ("lo", "kamu"), ("km", "kamu"),
    ("org", "orang"),
    ("emg", "memang"), ("emang", "memang"),
    ("pake", "pakai"), ("abis", "habis"),
    ("ilang", "hilang"), ("idup", "hidup"), ("liat", "lihat"),
    ("denger", "dengar"), ("dengerin", "dengar"),
    ("tau", "tahu"), ("bnr", "benar"), ("bener", "benar"),
    ("slalu", "selalu"),
    ("lemot", "lambat"), ("lelet", "lambat"),
    ("cpt", "cepat"), ("cepet", "cepat"),
    ("muter", "putar"), ("puter", "putar"),
    ("apk", "aplikasi"), ("app", "aplikasi"), ("apl", "aplikasi"),
    ("hp", "ponsel"),
    ("bete", "bosan"), ("males", "malas"), ("mls", "malas"),
    ("seneng", "senang"),
    ("pengen", "ingin"), ("pgn", "ingin"), ("pingin", "ingin"),
    ("mo", "mau"), ("mw", "mau"),
    ("pdhl", "padahal"),
    ("msh", "masih"), ("masi", "masih"),
    ("lg", "lagi"), ("lgi", "lagi"), ("lgsg", "langsung"),
    ("trs", "terus"), ("trus", "terus"),
    ("smpe", "sampai"), ("sampe", "sampai"),
    ("dlm", "dalam"), ("dalem", "dalam"),
    ("krg", "kurang"), ("lbh", "lebih"),
    ("ok", "oke"),
    ("thx", "terimakasih"), ("makasih", "terimakasih"), ("mksh", "terimakasih"),
    ("makasi", "terimakasih"), ("trims", "terimakasih"),
    ("mantul", "mantap"), ("gercep", "cepat"), ("santuy", "santai"), ("sante", "santai"),
    ("gini", "begini"), ("gitu", "begitu"), ("gt", "begitu"),
    ("eror", "galat"), ("error", "galat"),
]

STOPWORDS_TEXT = """
ada adalah adanya adapun agak agaknya agar akan akankah akhir akhiri akhirnya aku akulah amat amatlah anda andalah antar
antara antaranya apa apaan apabila apakah apalagi apatah artinya asal asalkan atas atau ataukah ataupun awal awalnya
bagai bagaikan bagaimana bagaimanakah bagaimanapun bagi bagian bahkan bahwa bahwasanya baik bakal bakalan balik banyak
bapak barangkali baru barulah bawah beberapa begini beginian beginikah beginilah begitu begitukah begitulah begitupun
bekerja belakang belakangan beliau berada berakhir berakhirlah berakhirnya berapa berapakah berapalah berapapun berarti
berawal berbagai berdatangan beri berikan berikut berikutnya berjumlah berkali berkata berkehendak berkeinginan
berkenaan berlainan berlalu berlangsung berlebihan bermacam bermaksud bermula bersama bersiap bertanya berturut bertutur
berujar berupa besar betul betulkah biasa biasanya bila bilakah bilamana bisa bisakah boleh bolehkah bolehlah buat bukankah
bukanlah bukannya bulan bung cara caranya cukup cukupkah cukuplah cuma dahulu dalam dan dapat dari daripada datang dekat
demi demikian demikianlah dengan depan di dia diakhiri diakhirinya dialah diantara diantaranya diberi diberikan diberikannya
dibuat dibuatnya didapat didatangkan digunakan diibaratkan diibaratkannya diingat diingatkan diinginkan dijawab dijelaskan
dijelaskannya dikarenakan dikatakan dikatakannya dikerjakan diketahui diketahuinya dikira dilakukan dilalui dilihat dimaksud
dimaksudkan dimaksudkannya dimaksudnya diminta dimintai dimisalkan dimulai dimulailah dimulainya dimungkinkan dini dipastikan
diperbuat diperbuatnya dipergunakan diperkirakan diperlihatkan diperlukan diperlukannya dipersoalkan dipertanyakan dipunyai
diri dirinya disampaikan disebut disebutkan disebutkannya disini disinilah ditambahkan ditandaskan ditanya ditanyai ditanyakan
ditegaskan ditujukan ditunjuk ditunjuki ditunjukkan ditunjukkannya ditunjuknya dituturkan dituturkannya dong dua dulu empat
enggaknya entah entahlah guna gunakan hal hampir hanya hanyalah hari harus haruslah harusnya hendak hendaklah hendaknya
hingga ia ialah ibarat ibaratkan ibaratnya ibu ikut ingat ingin inginkah inginkan ini inikah inilah itu itukah itulah jadi
jadilah jadinya jangankan janganlah jauh jawab jawaban jawabnya jelas jelaskan jelaslah jelasnya jika jikalau juga jumlah
jumlahnya justru kala kalau kalaulah kalaupun kalian kami kamilah kamu kamulah kan kapan kapankah kapanpun karena karenanya
kasus kata katakan katakanlah katanya ke keadaan kebetulan kecil kedua keduanya keinginan kelamaan kelihatan kelihatannya
kelima keluar kembali kemudian kemungkinan kemungkinannya kenapa kepada kepadanya kesampaian keseluruhan keseluruhannya
keterlaluan ketika khususnya kini kinilah kira kiranya kita kitalah kok kurang lagi lagian lah lain lainnya lalu lama
lamanya lanjut lanjutnya lebih lewat lima luar macam maka makanya makin malah malahan mampu mampukah mana manakala manalagi
masa masalah masalahnya masih masihkah masing mau maupun melainkan melakukan melalui melihat melihatnya memang memastikan
memberi memberikan membuat memerlukan memihak meminta memintakan memisalkan memperbuat mempergunakan memperkirakan
memperlihatkan mempersiapkan mempersoalkan mempertanyakan mempunyai memulai memungkinkan menaiki menambahkan menandaskan
menanti menantikan menanya menanyai menanyakan mendapat mendapatkan mendatang mendatangi mendatangkan menegaskan mengakhiri
mengapa mengatakan mengatakannya mengenai mengerjakan mengetahui menggunakan menghendaki mengibaratkan mengibaratkannya
mengingat mengingatkan menginginkan mengira menjadi menjawab menjelaskan menuju menunjuk menunjuki menunjukkan menunjuknya
menurut menuturkan menyampaikan menyangkut menyatakan menyebutkan menyeluruh menyiapkan merasa mereka merekalah merupakan
meski meskipun meyakini meyakinkan minta mirip misal misalkan misalnya mula mulai mulailah mulanya mungkin mungkinkah nah
naik namun nanti nantinya nyaris nyatanya oleh olehnya pada padanya pak paling panjang pantas para pasti pastilah penting
pentingnya per percuma perlu perlukah perlunya pernah persoalan pertama pertanyaan pertanyakan pihak pihaknya pukul pula
pun punya rasa rasanya rata rupanya saat saatnya saja sajalah saling sama sambil sampai sampaikan sana sangat sangatlah
satu saya sayalah se sebab sebabnya sebagai sebagaimana sebagainya sebagian sebaik sebaiknya sebaliknya sebanyak sebegini
sebegitu sebelum sebelumnya sebenarnya seberapa sebesar sebetulnya sebisanya sebuah sebut sebutlah sebutnya secara
secukupnya sedang sedangkan sedemikian sedikit sedikitnya seenaknya segala segalanya segera seharusnya sehingga seingat
sejak sejauh sejenak sejumlah sekadar sekadarnya sekali sekalian sekalipun sekaligus sekarang sekarangkah sekecil seketika
sekiranya sekitar sekitarnya sekurangnya sela selain selaku selalu selama selamanya selanjutnya seluruh seluruhnya semacam
semakin semampu semampunya semasa semasih semata sementara semisal semisalnya sempat semua semuanya semula sendiri sendirian
sendirinya seolah seorang sepanjang sepantasnya sepantasnyalah seperlunya seperti sepertinya sepihak sering seringnya serta
serupa sesaat sesama sesampai sesegera sesekali seseorang sesuatu sesuatunya sesudah sesudahnya setelah setempat setengah
seterusnya setiap setiba setibanya setidaknya sewaktu siap siapa siapakah siapapun sini sinilah soal soalnya suatu sudah
sudahkah sudahlah supaya tadi tadinya tahu tahun tak tambah tambahnya tampak tampaknya tandas tandasnya tanpa tanya
tanyakan tanyanya tapi telah tempat tengah tentang tentu tentulah tentunya tepat terakhir terasa terbanyak terdahulu
terdapat terdiri terhadap terhadapnya teringat terjadi terjadilah terjadinya terkira terlalu terlebih terlihat termasuk
ternyata tersampaikan tersebut tersebutlah tertentu tertuju terus tetap tetapi tiap tiba tidakkah tidaklah tiga toh tunjuk
turut tutur tuturnya ucap ucapnya ujar ujarnya umum umumnya ungkap ungkapnya untuk usah usai waduh wah wahai waktu waktunya
walau walaupun wong yaitu yakin yakni yang
ayo mari yuk dll dsb dst dkk tsb ttg ketiga keempat kemana dimana darimana sana situ kesana kesini kesitu disana disitu
engkau kau biarpun kendati kendatipun andaikata seandainya andaikan umpama umpamanya padahal lantaran kemarin besok lusa
kadang kadangkala terkadang acapkali kerap kerapkali senantiasa sungguh sungguhpun seantero sebatas seputar sekeliling
manapun dimanapun kemanapun apapun sungguhlah
"""

DOMAIN_STOPWORDS = """
spotify aplikasi android ios iphone ponsel handphone gadget perangkat google playstore gawai
akun email login versi developer pengembang fitur menu tombol layar aja deh dll dsb dst sih
nih tuh kok loh lho mah ya yah nya banget kayak kayaknya gitu gini
"""


def words(text):
    return [w for w in text.split() if w]


def main():
    os.makedirs(DATA, exist_ok=True)

    roots = sorted(set(w for w in words(ROOTS_TEXT) if w.isascii() and w.isalpha()))
    with open(os.path.join(DATA, "rootwords.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(roots) + "\n")

    slang = {}
    for k, v in SLANG_PAIRS:
        if k in slang:
            raise SystemExit(f"duplicate slang key: {k}")
        slang[k] = v
    if len(slang) != 124:
        raise SystemExit(f"slang count {len(slang)} != 124")
    with open(os.path.join(DATA, "slang.csv"), "w", encoding="utf-8") as f:
        f.write("informal,standard\n")
        for k, v in sorted(slang.items()):
            f.write(f"{k},{v}\n")

    stopwords = sorted(set(words(STOPWORDS_TEXT)) | set(words(DOMAIN_STOPWORDS)))
    banned = {"tidak", "bukan", "jangan", "lagu", "bagus", "suka", "iklan", "premium", "putar"}
    stopwords = [w for w in stopwords if w not in banned]
    if len(stopwords) != 809:
        raise SystemExit(f"stopword count {len(stopwords)} != 809")
    with open(os.path.join(DATA, "stopwords.txt"), "w", encoding="utf-8") as f:
        f.write("\n".join(stopwords) + "\n")

    print(f"roots: {len(roots)}  slang: {len(slang)}  stopwords: {len(stopwords)}")


if __name__ == "__main__":
    main()
