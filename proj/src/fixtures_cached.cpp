#include "bke/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace bke::fixtures {

namespace {

rsa::Caterpillar make_cached_7680() {
  return rsa::caterpillar_from_primes(
      from_hex(
      "ebed051485d53aaeadf70b58c97efd0f76da71d653773923a42c4cf674f9fae98427a047"
      "664025d9812cb3fc57aa6a346e9daa421701acc91bdffc27451e3b02bf3db981701ec301"
      "7fdf26036aa824d0faed7b9c918245e2a7f253831cfa5c373ea7bca766ba5c635a9842bb"
      "b707ff20ac8af52e55709712010e695dc1c8e2a5414c1728c79e3770cba4b3e67f7e6221"
      "2a0ecd3fd037b7103c6cdd65290773193f470522fe54d61add151583c80118851124744c"
      "df5ac39ae85d587aaaa9b49dc870b53c96419a39baa0e31ae89ab447a04a6b0baea868b2"
      "703fed1b8d91d3d12cda1f11a62bb477751ef755e8d0c748c8220e9d34b05cd3327addd8"
      "65ee0b9c427bfd72e96b433c3cf36d310d7f25e4f3bde722295761ba6802823a6efd811d"
      "2bdefd37a8d87f1099915472aa7f7a666ca7272a78d7375a19b4064396f3b44caab2351e"
      "e69cb30f114708f88437bf119fc9ca7c41eebed7cd3151cfa983a6797d33520c5a04b111"
      "58b1d271c9c8df9ff2e5186a52efe0092cc9547b19d3041ba2991a173538165b8d55889c"
      "e699c32f85e868106d634a79eb2a06a8e9c29f82096e2ffc1171182ad5c36aed4239e451"
      "de0dcf792c8fccfc7f9258ff2ba1d406dec6879daa7456c0a48eef23e9813519d8e2a22d"
      "78202b8216c46b96e7fe9105"),
      from_hex(
      "cfb926f0c6b753c3d964ab7ea7c15257be4ea21006c75a9e30310545e49d920e5ef71da5"
      "4ca43f1d1ae41f33c66ed930b3facf44e0961b5e1bddf26586a1aa2a989db39de3b14eac"
      "a8adbce3a7eb8acc210646d390ef74f6f909521687f1587c25d6845ce712f66ad683c664"
      "9e758033a7a14288706a8ae7e9fae53449facdcbae6873e5c6e039922d76f54fb19eceb0"
      "9e62afd1f78bb19986d8b8f4fd8369aaad0fc5fc10c01320e14f0cdbfc214b85c5be6527"
      "8403d9050a45447eaffd277e27437ffc39db13ac2468c1be7a84851f2980412d94fdd7e1"
      "88fd123ade92653b01ffc7f488673a0a9b8fee89ec28f1ec7f4829fb0000a293f01c455d"
      "81a7dbbaf747f79a22bb2340addb9753398f5f06156ffc2b538a8f0c54868e7997d1ef85"
      "82c4cc774c2386e23da0b64238d1ab024c9d94928d508740f395d161c0f8c0e98430cb0c"
      "c3c9a4ee44d7bb6602c068455eb431fc4b0557d06f0778ca70803ad65c452b7e0b97e5ff"
      "d9ab7d386a6782c09d31226f8f4eea15c60d56e7bc1dd407db9de4965c6ae13c5b740194"
      "140b0acb05a8cf9f23ac5d50af1ad72c59b1c5c76017d1615d5926ed4fedcda9ed5f6ed4"
      "e513e0a492fb0fc6986696d45bb4c89f19dfaa299a1e2874737a49c640aa5b4909eed136"
      "418eb96c705c6f59bba9da5d"),
      from_hex(
      "20772befc5af58d52de251345fb36139c894279e4f85b6eb78b6a31a71613ade2a911b81"
      "90e0b19ada48649c8fc1523e8269e02371f7eb9ee51c108c971ff14678cf30c14d4112dc"
      "ec4ccbd817bf122c9a0be04766957b088fa684ff8e898bc2caaa001f12ead63f75f06cac"
      "94e7e5bcae449923e7e37b24a2dbd29683b39a36b7913be222c15a546434dd35bc5c8532"
      "9c8bdbe8d544cc21cb84dc2a53438ddb205bef50aa3b705fdfbd6de78dde8ef47a88c3a0"
      "1db13f3a0a077d8b704bf1a19c1bbb8c5037fdbd5bd8fd87526728ee7195c5ccfa39d92d"
      "79740c2b3aac6bbfa7286e930079de373f035e2ec506f9a39701aaaedf6fcd98ca255b16"
      "48c90863118bafa97807866773329cbc5ec140c858879800934e5c839b400980bd523dec"
      "25d711448d39320c2833217a58a85fe6bf0ff77303aedc98fa4ee648127a6ff9dd3e2290"
      "de39d82ebaf42b68de2016b713231b0dd1db042d101aeaad5a9513f7e1b4c06f817d9b83"
      "8d7da1fb8d2f34ea25fa46344dc1968a8a75bb1ef8dc804287757ed44cb8bcc7df2f419e"
      "4394b3535646c21fbc5e74d06b43404d769158c5d25af70a8cc448b1ceb143e7f529fe6d"
      "80da797a8fab9569b77e38580b674920ce0c217582078ca7e65d512c156b75ea190d99f5"
      "ce9669790beed029a2dbb67e5767e8fb1c78b60a75ce33d1cca926f21a3380fa33004d09"
      "21b6d69978f9539ce43c7e7a17b0774879b1925ee6b6dacddb4feb1c4cdd25ced61783e2"
      "b30e8131bcb4c09da5f92a2bb7464955d2eee12102223f09d14e88590ef601d7f82559df"
      "e0443db64f40335697fa9bec512818eb367c2a6f486d203129bd20b744d3eb138d2290e0"
      "db7d8f5bee8568e9b5708c1f73f649700949a475c044e8a759e5206bf5eaf814f016ad47"
      "aa5083865b2850d8f5edc6ab11069fa99c609db797f65d89e654a5817f6265478d282c80"
      "86960d9dcd9ea0e6464a64ccea4b8566c3004ab6c4dc914395914c58d65a4e51d108ace1"
      "0fe7f256d0844a95a9f056f236cc4e08046d95a5a4cf7b6bc86f0c080cdc1c0ec0dfa8cb"
      "8f9f1350939232577288990f13fa1acc78e36e7bc5c5fb3d2c05083af68a293c7952e65b"
      "457bc27e501267030f539e2eb091ec34151ac494031a1340249e6c1d3fc041f666feb72f"
      "c5b5f8a1e4fc15aa3cbf03276c669b6bd135e95640fee4e1aab414e51ce00a3296734517"
      "420cf3a41551c9c542dc38f051a14354067ebccb2521cc05965a6bf4d738ae0e161121e9"
      "254e153cd0eeeb74701fa7783015fdbc710635ab5f6dbb099a8fc22873ec02be75f825a7"
      "b2a6ae696eb7a36a4a1af859a8627e9d34f588fd36ae5b27"));
}

rsa::Caterpillar make_cached_15360() {
  return rsa::caterpillar_from_primes(
      from_hex(
      "fc805ed2645abadd2570a9ad62913ba577cb7a54760bfdb51739210fe943a4c3089ad756"
      "66ff62c14fb3e52f7cd391c0b24235ce662caa0a5d1184cfa8a613aa180473939af648ae"
      "05f5cc7ab16d9c54fea0906af28146a511a9cbeccc6706f4555c62b3f0c9d3c6a603940d"
      "30d3f76f5e6a8b117016ee87cd5be39922a105c6a08287fed895fffbe6bfc95a6cbfd1c4"
      "06f2b2517a04a0a690653020f7d39c11580f291f0b7ae343a6a8e4d072d10bd656d0086e"
      "3fbb89890de75f1202966981017762f93486f3a72209722af4775dcc5d9b4d87faf7e8ef"
      "899f3006d3d98248e288c63c99afb5301ae1eb3ea0a9afbddb5a6eca092cec156d33150a"
      "c45432d6498ff5cb80e3384f42b890aaafc5fe0034360941e3c550effb4edef6d08efa4c"
      "c4fa7e8d2c1024489647ad09e6cc31575c3b0c8453a20060caad4f58e5361ea1b99d798f"
      "e96ded10b71090ed03bb2e81fe8162ca02bc5167c7be4593c15fd2d3b635c047d89d4043"
      "f6dae7d2f4feacbdb1f5a0d6be760b73799694622715bdf55304750cb1b2f4a6645981fa"
      "b64c31223006fd405c51e917dd429d92bd77591d925b8ee31907c8079d036ce9dae21637"
      "c631f36ce54c7b0722b01f71cd859bfdb59e2b9050cbb0a89b96d6025d9a63d621160476"
      "c437f15822950f4a19b50045f764f7771f1ca516dae18e6c84296926ea04cb2f90590e19"
      "cd281c1bfa52690a8401732ab8e175383ba458a055abbc31bfc1d593be737393ad4360b9"
      "8fc0117343174bb179f4b7dd71fbc7761da163d84dd0e5d0da7b4bcf0a12ad621c75e4d1"
      "f36a59ba3be0b468845138c9abbf0493fd13b2e9147fbe4939c2c1ca6e29c64c7c52e601"
      "ca927b69ff34fe47e45c1281477a2afb84f017cf150c704c223d0bf90fb2732dbea208f4"
      "e9c3e42d1a740e5e9d0ad9de67230ad84c6b9ee993f7bb508d298e381c48c035e817fb1e"
      "08611bf2837f5c9fe4a172dc160c16827b912034179efb1710585f8f595897f9d262ba97"
      "c3a961a4308d6216d7735cc23cf404fb543cc2854870f323fd75fd0ec5d7aae1151a5215"
      "d68baaced6629c8e444d80664da3e3024592e0fa8ad7fbdbfa5239fef8fc7f69b7391603"
      "d16d001e19287eac0554bf7974f8ed3976c02c53fa1ad39ccb408835ccf1b9fe4318a939"
      "31e05a5be13e9d846f82ccd1102432f621c56094cd851d17670d9cdfbfa5dabe73fa6042"
      "89117fcefe0b8c8f1044933a2b941d278db4d9095e0315258e6c11a51c45e8dd618bb61b"
      "2a0c6f7a7519d823a933235d9f490d36024b6207f6eb45efe32a0cac35bd7e3191814393"
      "57422bd7f795473458b55b198e26ccb73bf0979bbf473667"),
      from_hex(
      "eade0819b5bfd71a3cae8300b86b599031ffb4d8de45e94fabd77c033de51df6950cdabb"
      "db1c6123fb9b9303a09df7f7e5b02ae04d55dc683c875639298a3e016db072ad1e588e4e"
      "a1e8d06cbd771b95d4838c3afafdb76e93ee6a71c9c09024f1b793a3114f5607856aaa54"
      "e5ffdd91d8f4c0eb8f4b5fc02091dc51afd0914079255bb4b5741aecfac168628b7f817a"
      "0d36a77814e9168096a4d80716077282675e5ad818097d5656728f7b092dbc046b46a12a"
      "77e5961006bf5dea3d9af80aa0fae9439ec197c4c0b506eb7fbcfff03f1a9637ce28f610"
      "c7a758fad83a8fadde86adc945306ba275c77f1e513989050975d6736de407c0ae3df38a"
      "677fc5763faefadc67ca50191db582729cdfbca60e2d3f78503aa57f7168556ce0db93b5"
      "08f7e06639a29b6e949a2970a499d7ca9b91c3b93c17e30755c54ba984479ea43943e641"
      "42b86add942eafab844d0a18c9765c4db6e4d696a3696be34330aff46153e2354349e073"
      "2b70167874f9c4e4be31108aa2d8cab8d17a1d5e047a0ed7581d12ef157f530f4fae2a4c"
      "ba9a9da1c5a43fa6ff00b3509911168fbc337c1cf663db14696268207ef2cbaecf0cac4f"
      "752058cfd33dc62c60f9779f76b18067765397445730764ccc836bf5574a68b8167f9218"
      "ae2854a4ded229558a66a24b11bf165ad05b01afa303da6e202b886e13d190369cda3876"
      "92c7e63f38bd642374e557e2d7c80814e6295d016f4f99cfc598b08e75eb67b52ef43a70"
      "340dc8a9b5768c1f8e95737322f6a796035a4c4ffcb70c6a23c05862632b245ea9dd378c"
      "b99d322138c6cc7d211c15084f49f9d3be497812818e32597291183cbf38fee06b4bbe20"
      "9012fe31d51cf49235500bf884db2319d0bd52ab2e8228a71974b4fdd8dea83c49fade70"
      "0f05c11b50c3574c515b3dc352b3ec6933f297860d91eb76a38ab68868ed258492931f15"
      "eaead19e341251016c5be19f39b387b1cf040ac5e3249298ad8a0ca643071956a6b01221"
      "9eec0fa9f95c46761b0d9d2f0c7b63e37c954021bdf94e0bace2b2e4189a9a512d994f56"
      "0452d5c5bfe8c1c23ab1ae3e9e7876bc2d6ad51fbccd2105b65bb3d9d85c37c1d8e0002b"
      "c68af8f41a031955ea496b95a50c2106f5dd4c691069bde234c1b6ce4deb6b745072013f"
      "79a2d63cbfcae9b169bf97f0a5e65814ea6d3e6370aadc544430ddd254799b8a7f699fcb"
      "377fc82b4e0116a013270c38cb02ad124f4db8818049fda151183f1edc601dd6ca5cd28c"
      "b4a6c99303bd6ebe4b3633415c6b73351377b9356c70371f32de6f49e64f88b56b3608e7"
      "7c0dace00419ff649e8294d904a1c44669c73c058b78301d"),
      from_hex(
      "58b165cf9ea0cd8a33a062583dd9284275757a5569f9a931cb01db4168a8270c441b6862"
      "6e8d4a8ac0f8b6bd33e7f8cc58d7083ea08bf25f21d64f82c33aa8cfd0325c9a5a782965"
      "4c9453c7124142ec35d73a91ae9cc1e93537876511d74aa8de1769d54e415fc2f135bc03"
      "ebc29efdc108108587f20a720ddbe473739e4efb453a69f53629fab161e47dff5892e14c"
      "605cbbf5b306f3fbcd9174ead67fd12c08e19beb9b0d7436b03967442d227db80f19f49c"
      "681866c3227631ffb64d9d0b30e9ba2ab436dddab28b5509bf864bc3bbee6198feecb8c9"
      "8db8141757ff1f0d56162b866e8e4fa12d715e5904930392611372720bda868c83ab31ba"
      "924b2867d9e7c971d15e3e2aa31289304259bfd827d46451910ac165d4c7b7e24e13171f"
      "93d2b87719fc4fe86abed29450b8e935fa0a66968cc104da22469f7d65a8997a71f9a120"
      "ff6d1777e256effe1befbbe5bdaded249e80cc981427651d3d2d33073b4adb0d8f26469a"
      "f2e3de079decfccdf8b395f67b9f61f44d6199cb122e31cff552ef8c256199ab11e9e2e2"
      "2cd6308990b72aa33152f2678f8256845a5126a95c41e8224339b258d50d0cafe8073212"
      "7984c7f481c5f3dacb1c0f751a91e9fe107159d640137f4c9607195f5f60dd3fca1b84be"
      "701e359a5378d620e74c5f2117f6fd4986024f9f6b60e1b15f91588ea989b05292e22dcd"
      "f19ab88f0410b7a416bd8cd09aa1cec51a957c184ca5980247dccf9433ddb5c7082c1026"
      "84b11c06478d58145765557ff39848f65eef3534e302b116012f40bc29a1e37f79cd0030"
      "41941ae2180f0cbaa2c616d5f3c163bbf9aaa8a1455b2bf55e023da32b5314aaf1748bb9"
      "e32b9c4e55501b216322d73059b33be789c061cfdbba72560683f839e2534f015c26140a"
      "c1156741f7a875e55bd7425553e2909698b9273a6e644aca84caa4624167abeb80d500e9"
      "6dad0224dc922552753731ce380ac87ef01fce0914b9e243825a795a540e7bf590f855c5"
      "320a614ff16191914f449b1bc9dc8450c3539c66de9770f904e0ab97aabd9920436dff1a"
      "8dbb7ee7c1f29676657991a165c119b658fa8e86c56d42319edf34704d810a894fdbb566"
      "5aafa76efaf43aac157fd5d9cf2ebaf2771c9c8594b7f5d14a2ea74920e4d26ef34f9bcc"
      "464f0d0d448cffa542e3144b67fd445667b4ce147ff6c858d001ebaa1318c5af312811cb"
      "6f0adfa51b25932ab69ea2d922a0cd81e8a791585add7324824809bb9e1f7e3c541812b4"
      "df89593088496591918f5718fb3c6a0ab5164b12bcbba7f8d5e9c99db7f439fcf1b2efa7"
      "aa4dbcde42efc535ef11bb7c9d7ed78eeec4fdfa338c61cc6dce7d5cfcd372b785c331a9"
      "a78033f05f99428bef5ccae2d589828a32590f0aa9de79ce037212c83e84d6e992e40c92"
      "1595ed792e37b50f1e104a84fef7870492c69839ddc04a56023f2f0cc93fffd1d4565593"
      "1681ecd6fe14f2a0f3817ead9d5b5992b214406c089b7d1e08401a9ab49689aa2d33f362"
      "9dda90775b1c0c03d635ccba38dbdead5d471faf686f092d2a87401477618c3d0b5300e0"
      "62c92da4251ee3e08b42cd74c081635b256377dc53031f65cbcbf0c87b4ffd975bf9ec1d"
      "00cbd4b59ab65a815acc081f7e0d0186d52ceca45355a319bbf01d37eb037edf5f940f8c"
      "2b139cee89df3ecba2ac0d8297b30da3f8e5e75df11904822171a84c3659f08dd6bd17a6"
      "596bea09427fd7144717f227716e59b2623919aff327d73c745603f41e25d47529d6e909"
      "bfea9bf8207bb77753031d872bf1c147c61836b8aef97a125bba37421166f6698a93f6f7"
      "f37e25f952b8f99a64092cd37ac772bc80bb1dc9901891541094453ec40c7c17c35e7954"
      "9d81a8b3462d412e850aab277cb3c4a96eedc68bf9e222112ae3a43a2f23ac84404dd4b1"
      "6ed9f31d980e114994ae614d05b049d39ed2e19b093aa4da7befa2d6ef0be95d750a8ef9"
      "3895959c4ac9b95748d265bc6b92e7dc3a7c18d593d1021fa5676871aa631632948443f2"
      "24e3ca2b5f7ae79a688137a396c64d15e040dfd71cade4e9c5e4468b5902d69165c2f409"
      "ea3859c1b18fc2bbcbb10de810813d1012390baaa6fdce94be387ed63916787e9cd5afd7"
      "be81f11a5a05d5dfcad08cbbc79c3f1363d92cea6e8be4efe26ddd6f7247fc0a4632a3dd"
      "33bb926f3406e27a44e0c7dabe25eda6a7a86cd731a398402e5c3a3d245da2ea600b58f4"
      "16b4f57caf0c9f32d62d31975a0bea139590114384370f6411577e23fb325fba71fdafd7"
      "ff6e030574b2d6c957bed5b06059b5222a9ff8b67de5a818b9f397a3fdb6edf77d25dcb3"
      "eb0bdee00d939c6e286cfdb656778ae8acc06f3ade0f6d46c463b949429e8015659e5a89"
      "c1ec4174dcebd4f81796d149abf0fc6c865c8f233959f83a706c34517c798ad56ba08e6b"
      "8b1655ad7b0a5eece66755aa57865a4bde42c9b6a6481771bddbe0f2c71516256fab4ce1"
      "cb303191761421a8ddec793f0fea3679f56e5e20c1b6304dfc3e3b365a58da571199d1e4"
      "bed47d379f558ebf536c3152511272baad0dae44a5d3bcae22409660e528424745b92929"
      "a790b5b82841caed4c7959b62502153831ce9995a5e819b930bf8a396fa0efef7d1ab36e"
      "60aec3793e58debc9846f1826d94852d1a52bb8f98ee1f03657a647d75e4bb5c3537c99a"
      "0d2bb3dff7ccfa83cd5ac4a7"));
}

const std::map<unsigned, rsa::Caterpillar>& cached_table() {
  static const std::map<unsigned, rsa::Caterpillar> table = [] {
    std::map<unsigned, rsa::Caterpillar> t;
    t.emplace(7680, make_cached_7680());
    t.emplace(15360, make_cached_15360());
    return t;
  }();
  return table;
}

}  // namespace

bool has_cached_caterpillar(unsigned modulus_bits) {
  return cached_table().count(modulus_bits) > 0;
}

const rsa::Caterpillar& cached_caterpillar(unsigned modulus_bits) {
  auto it = cached_table().find(modulus_bits);
  if (it == cached_table().end())
    throw std::invalid_argument("no cached caterpillar for " +
                                std::to_string(modulus_bits) + " bits");
  return it->second;
}

}  // namespace bke::fixtures
